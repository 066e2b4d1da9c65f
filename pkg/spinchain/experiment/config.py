#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Experiment configuration and its JSON representation.

Physical quantities are stored in SI units; JSON field names carry the unit
(`splitting_hz`, `omega1_rad_s`, `max_duration_s`, ...).
"""

import json
from typing import Any, Dict, NamedTuple, Optional, Tuple, Union

import torch
from torch import Tensor

from ..exceptions.errors import ConfigurationError, SpinchainError
from ..preparation import (
    DEFAULT_BASE_STRENGTH,
    DEFAULT_MAX_DURATION,
    MIN_GRID_POINTS,
    PreparationPulseSpec,
)
from ..pulses.evolution import EvolutionMode
from ..readout.acquisition import AcquisitionConfig, as_windows
from ..relaxation import DEFAULT_LINEWIDTHS_HZ, RelaxationModel
from ..spins.system import DEFAULT_SPIN, DEFAULT_SPLITTING_HZ, SpinSystem
from ..utils.linalg import REAL_DTYPE


NUTATION_PROFILE = "nutation"
ROUNDED_PROFILE = "rounded"


class ExperimentConfig(NamedTuple):
    r"""Everything needed to run the pulse sequence and the sweep.

    Attributes:
        spin: Spin quantum number.
        splitting_hz: Quadrupolar splitting.
        preparation: Preparation weights, or "nutation" (the exact rotation
            profile) or "rounded" (0.7, 0.9, 1, 1, 0.9, 0.7).
        base_strength_rad_s: Preparation pulse strength.
        prep_max_duration_s: Upper end of the crossing search.
        omega1_rad_s: Strength of the chain-emulation pulse.
        mode: "ideal" or "full".
        max_step_s: Integration step override.
        relaxation: Relax during the pulses.
        linewidths_hz: Line widths (FWHM) of the single-quantum lines.
        t1_s: Optional longitudinal relaxation time.
        acquisition: Readout settings.
        tau_grid: Explicit sweep grid; overrides `tau_max` / `tau_steps`.
        tau_max: Largest dimensionless time of the uniform grid.
        tau_steps: Number of points of the uniform grid.
        max_duration_s: Evolution length above which a DurationWarning is issued.
        full_response: Reconstruct with the full response matrix instead of
            the ratio method.
        output_dir: Directory receiving the output files.
    """

    spin: float = DEFAULT_SPIN
    splitting_hz: float = DEFAULT_SPLITTING_HZ
    preparation: Union[str, Tuple[float, ...]] = NUTATION_PROFILE
    base_strength_rad_s: float = DEFAULT_BASE_STRENGTH
    prep_max_duration_s: float = DEFAULT_MAX_DURATION
    omega1_rad_s: float = 5.0e3
    mode: str = "ideal"
    max_step_s: Optional[float] = None
    relaxation: bool = False
    linewidths_hz: Tuple[float, ...] = DEFAULT_LINEWIDTHS_HZ
    t1_s: Optional[float] = None
    acquisition: AcquisitionConfig = AcquisitionConfig()
    tau_grid: Optional[Tuple[float, ...]] = None
    tau_max: float = 1.5
    tau_steps: int = 16
    max_duration_s: float = 600e-6
    full_response: bool = True
    output_dir: str = "results"

    def system(self) -> SpinSystem:
        return SpinSystem(spin=self.spin, splitting_hz=self.splitting_hz)

    def preparation_spec(
        self, sys: Optional[SpinSystem] = None
    ) -> PreparationPulseSpec:
        sys = self.system() if sys is None else sys
        kwargs = dict(
            base_strength=self.base_strength_rad_s,
            max_duration=self.prep_max_duration_s,
            grid_points=MIN_GRID_POINTS,
        )
        if self.preparation == NUTATION_PROFILE:
            return PreparationPulseSpec.nutation_profile(sys, **kwargs)
        if self.preparation == ROUNDED_PROFILE:
            return PreparationPulseSpec(**kwargs).validate(sys)
        if isinstance(self.preparation, str):
            raise ConfigurationError(
                f"Unknown preparation profile {self.preparation!r}."
            )
        return PreparationPulseSpec(
            relative_amplitudes=tuple(float(r) for r in self.preparation), **kwargs
        ).validate(sys)

    def evolution_mode(self) -> EvolutionMode:
        return EvolutionMode.from_name(self.mode, max_step=self.max_step_s)

    def line_model(self) -> RelaxationModel:
        r"""Line widths seen by the receiver (always present)."""
        return RelaxationModel(self.linewidths_hz, t1=self.t1_s)

    def relaxation_model(self) -> Optional[RelaxationModel]:
        r"""Relaxation acting during the pulses, None if switched off."""
        return self.line_model() if self.relaxation else None

    def taus(self) -> Tensor:
        r"""The sweep grid of dimensionless times."""
        if self.tau_grid is not None:
            return torch.tensor(self.tau_grid, dtype=REAL_DTYPE).reshape(-1)
        if self.tau_steps == 0:
            return torch.zeros(0, dtype=REAL_DTYPE)
        if self.tau_steps == 1:
            return torch.zeros(1, dtype=REAL_DTYPE)
        return torch.linspace(0.0, self.tau_max, self.tau_steps, dtype=REAL_DTYPE)

    def validate(self) -> "ExperimentConfig":
        r"""Check the configuration for consistency.

        Raises:
            ConfigurationError: On any invalid or inconsistent setting.
        """
        try:
            sys = self.system()
            self.preparation_spec(sys)
            self.evolution_mode()
            self.line_model()
            self.acquisition.validate(sys)
        except ConfigurationError:
            raise
        except SpinchainError as e:
            raise ConfigurationError(str(e))
        if len(self.linewidths_hz) != sys.n_transitions:
            raise ConfigurationError(
                f"Expected {sys.n_transitions} linewidths, "
                f"got {len(self.linewidths_hz)}."
            )
        if not self.omega1_rad_s > 0:
            raise ConfigurationError(
                f"omega1 must be positive, got {self.omega1_rad_s}."
            )
        if isinstance(self.tau_steps, bool) or not isinstance(self.tau_steps, int):
            raise ConfigurationError(
                f"tau_steps must be an integer, got {self.tau_steps!r}."
            )
        if self.tau_steps < 0 or self.tau_max < 0:
            raise ConfigurationError("tau_max and tau_steps must be nonnegative.")
        taus = self.taus()
        if (taus < 0).any():
            raise ConfigurationError("The tau grid must be nonnegative.")
        if taus.numel() > 1 and (taus[1:] < taus[:-1]).any():
            raise ConfigurationError("The tau grid must be sorted.")
        if not self.max_duration_s > 0:
            raise ConfigurationError("max_duration_s must be positive.")
        return self


_ACQUISITION_KEYS = {
    "reading_angle_rad": "reading_angle",
    "broadening_hz": "broadening_hz",
    "dwell_s": "dwell",
    "n_points": "n_points",
    "transients": "transients",
    "phase_steps": "phase_steps",
    "window_half_width_hz": "window_half_width_hz",
    "windows_hz": "windows",
}

_PREPARATION_KEYS = {
    "profile": "preparation",
    "base_strength_rad_s": "base_strength_rad_s",
    "max_duration_s": "prep_max_duration_s",
}

_TOP_LEVEL_KEYS = {
    "spin",
    "splitting_hz",
    "omega1_rad_s",
    "mode",
    "max_step_s",
    "relaxation",
    "linewidths_hz",
    "t1_s",
    "tau_grid",
    "tau_max",
    "tau_steps",
    "max_duration_s",
    "full_response",
    "output_dir",
}


def _check_keys(block: Dict[str, Any], allowed: Any, where: str) -> None:
    unknown = sorted(set(block) - set(allowed))
    if unknown:
        raise ConfigurationError(f"Unknown {where} keys: {', '.join(unknown)}.")


def config_from_dict(data: Dict[str, Any]) -> ExperimentConfig:
    r"""Build an ExperimentConfig from its JSON dictionary.

    Missing keys keep their defaults; unknown keys raise.

    Raises:
        ConfigurationError: On unknown keys or invalid values.
    """
    if not isinstance(data, dict):
        raise ConfigurationError("The configuration must be a JSON object.")
    try:
        return _config_from_fields(dict(data)).validate()
    except (TypeError, ValueError, AttributeError) as e:
        raise ConfigurationError(f"Malformed configuration: {e}")


def _config_from_fields(data: Dict[str, Any]) -> ExperimentConfig:
    prep = data.pop("preparation", {})
    acq = data.pop("acquisition", {})
    _check_keys(data, _TOP_LEVEL_KEYS, "top-level")
    _check_keys(prep, _PREPARATION_KEYS, "preparation")
    _check_keys(acq, _ACQUISITION_KEYS, "acquisition")
    fields: Dict[str, Any] = dict(data)
    for key, value in prep.items():
        fields[_PREPARATION_KEYS[key]] = value
    if isinstance(fields.get("preparation"), list):
        fields["preparation"] = tuple(float(r) for r in fields["preparation"])
    for key in ("linewidths_hz", "tau_grid"):
        if fields.get(key) is not None:
            fields[key] = tuple(float(v) for v in fields[key])
    acq_fields = {_ACQUISITION_KEYS[k]: v for k, v in acq.items()}
    if acq_fields.get("windows") is not None:
        acq_fields["windows"] = as_windows(acq_fields["windows"])
    fields["acquisition"] = ExperimentConfig().acquisition._replace(**acq_fields)
    return ExperimentConfig(**fields)


def config_to_dict(cfg: ExperimentConfig) -> Dict[str, Any]:
    r"""JSON-ready dictionary of a configuration (inverse of config_from_dict)."""
    data = {key: getattr(cfg, key) for key in sorted(_TOP_LEVEL_KEYS)}
    for key in ("linewidths_hz", "tau_grid"):
        if data[key] is not None:
            data[key] = list(data[key])
    prep = cfg.preparation
    data["preparation"] = {
        "profile": prep if isinstance(prep, str) else list(prep),
        "base_strength_rad_s": cfg.base_strength_rad_s,
        "max_duration_s": cfg.prep_max_duration_s,
    }
    acq = {
        key: getattr(cfg.acquisition, field)
        for key, field in _ACQUISITION_KEYS.items()
    }
    if acq["windows_hz"] is not None:
        acq["windows_hz"] = [list(w) for w in acq["windows_hz"]]
    data["acquisition"] = acq
    return data


def load_config(path: str) -> ExperimentConfig:
    r"""Read an ExperimentConfig from a JSON file."""
    try:
        with open(path) as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Cannot read configuration {path}: {e}")
    return config_from_dict(data)


def dump_config(cfg: ExperimentConfig, path: str) -> None:
    with open(path, "w") as f:
        json.dump(config_to_dict(cfg), f, indent=2, sort_keys=True)
