"""Cartan schemes, Weyl groupoids, right Duflo order and coideal subalgebras."""

import json
import sys
from pathlib import Path

from ._core import (
    DEFAULT_MAX_LENGTH,
    DomainError,
    InputError,
    OverflowError,
    Scheme,
    VerificationError,
    WeylError,
    __version__,
    enumerate_coideals_small,
    symmetrizer_dim,
)

if sys.version_info >= (3, 11):
    import tomllib as _toml
else:
    import tomli as _toml

__all__ = [
    "DEFAULT_MAX_LENGTH",
    "DomainError",
    "InputError",
    "OverflowError",
    "Scheme",
    "VerificationError",
    "WeylError",
    "__version__",
    "enumerate_coideals_small",
    "from_braiding",
    "load",
    "symmetrizer_dim",
]


def from_braiding(q, mode="generic_q", **options):
    """Scheme generated by reflecting the braiding matrix `q` (rows of scalar literals)."""
    return Scheme.from_dict({"rank": len(q), "mode": mode, "q": q}, **options)


def load(path, **options):
    """Read a scheme document from a .json or .toml file."""
    path = Path(path)
    if path.suffix == ".toml":
        with path.open("rb") as fh:
            doc = _toml.load(fh)
    else:
        with path.open() as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InputError(f"InvalidJson: {exc}") from None
    return Scheme.from_dict(doc, **options)
