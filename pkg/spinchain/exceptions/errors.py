#!/usr/bin/env python3

# Copyright (c) The spinchain authors. All Rights Reserved

r"""
Spinchain Errors.
"""


class SpinchainError(Exception):
    r"""Base spinchain exception."""

    pass


class InvalidArgumentError(SpinchainError, ValueError):
    r"""Exception raised for arguments outside their physical domain."""

    pass


class InvalidStateError(SpinchainError):
    r"""Exception raised when a density matrix is malformed or non-Hermitian."""

    pass


class InvalidPulseError(SpinchainError):
    r"""Exception raised for shaped pulses that cannot act on the spin system."""

    pass


class ConfigurationError(SpinchainError, ValueError):
    r"""Exception raised for inconsistent simulation or acquisition settings."""

    pass


class NoCrossingError(SpinchainError):
    r"""Exception raised if the preparation pulse never equalizes populations."""

    pass
