#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

from .errors import (
    ConfigurationError,
    InvalidArgumentError,
    InvalidPulseError,
    InvalidStateError,
    NoCrossingError,
    SpinchainError,
)
from .warnings import (
    DurationWarning,
    ReadoutWarning,
    SelectivityWarning,
    SpinchainWarning,
)


__all__ = [
    "ConfigurationError",
    "InvalidArgumentError",
    "InvalidPulseError",
    "InvalidStateError",
    "NoCrossingError",
    "SpinchainError",
    "DurationWarning",
    "ReadoutWarning",
    "SelectivityWarning",
    "SpinchainWarning",
]
