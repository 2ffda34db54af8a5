"""Construction programs (certificates), their replay, and extraction from graphs."""

from __future__ import annotations

from ..core import BidirectedGraph, Sign
from ..errors import PreconditionError, ReplayError
from ..radials import ClassLabel
from ..reach import DEFAULT_BUDGET
from .almost import AddRootEdge, AlmostStrongTree, Base, Glue, decompose_almost_strong, replay_almost_strong
from .ears import (
    SCOOP,
    SIMPLE,
    DiEar,
    EarMode,
    EarProgram,
    ProgramEar,
    extract_absolute,
    extract_strong,
    find_diear,
    replay_ear_program,
    to_program_ear,
    validate_diear,
)
from .generate import Certificate, random_program, random_poset, random_strong_piece
from .linear import (
    Contact,
    LinearCore,
    SublinearCore,
    decompose_linear,
    decompose_sublinear,
    replay_linear,
    replay_sublinear,
)


def replay(cert: Certificate) -> BidirectedGraph:
    """Rebuild the graph a certificate describes, checking every step."""
    if isinstance(cert, EarProgram):
        return replay_ear_program(cert)
    if isinstance(cert, AlmostStrongTree):
        return replay_almost_strong(cert)
    if isinstance(cert, LinearCore):
        return replay_linear(cert)
    if isinstance(cert, SublinearCore):
        return replay_sublinear(cert)
    raise ReplayError("certificate", None, f"unknown certificate type {type(cert).__name__}")


def decompose(
    G: BidirectedGraph, r: str, alpha: Sign | str | None, cls: ClassLabel | str, *, budget: int = DEFAULT_BUDGET
) -> Certificate:
    """Certificate of ``G`` for ``cls``; raises :class:`PreconditionError` when ``G`` is not a member."""
    cls = ClassLabel.parse(cls)
    if cls is ClassLabel.ABSOLUTE_SEMIRADIAL:
        return extract_absolute(G, r, budget=budget)
    if alpha is None:
        raise PreconditionError(f"{cls.value} needs a sign alpha")
    if cls is ClassLabel.STRONG_RADIAL:
        return extract_strong(G, r, alpha, budget=budget)
    if cls is ClassLabel.ALMOST_STRONG_RADIAL:
        return decompose_almost_strong(G, r, alpha, budget=budget)
    if cls in (ClassLabel.LINEAR_SEMIRADIAL, ClassLabel.SUBLINEAR_RADIAL):
        f = decompose_linear if cls is ClassLabel.LINEAR_SEMIRADIAL else decompose_sublinear
        out = f(G, r, alpha)
        if not out:
            raise PreconditionError(f"not a {cls.value}: {out.reason}")
        return out
    raise PreconditionError(f"no constructive characterization for {cls.value}")


__all__ = [
    "AddRootEdge",
    "AlmostStrongTree",
    "Base",
    "Certificate",
    "Contact",
    "DiEar",
    "EarMode",
    "EarProgram",
    "Glue",
    "LinearCore",
    "ProgramEar",
    "SCOOP",
    "SIMPLE",
    "SublinearCore",
    "decompose",
    "decompose_almost_strong",
    "decompose_linear",
    "decompose_sublinear",
    "extract_absolute",
    "extract_strong",
    "find_diear",
    "random_poset",
    "random_program",
    "random_strong_piece",
    "replay",
    "replay_almost_strong",
    "replay_ear_program",
    "replay_linear",
    "replay_sublinear",
    "to_program_ear",
    "validate_diear",
]
