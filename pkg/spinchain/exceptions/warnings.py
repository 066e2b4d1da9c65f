#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Spinchain Warnings.
"""


class SpinchainWarning(Warning):
    r"""Base spinchain warning."""

    pass


class DurationWarning(SpinchainWarning):
    r"""Warning issued if a pulse runs longer than the configured maximum."""

    pass


class SelectivityWarning(SpinchainWarning):
    r"""Warning issued if RF harmonics are strong enough to hit neighboring lines."""

    pass


class ReadoutWarning(SpinchainWarning):
    r"""Readout related warnings."""

    pass
