"""Text serialisation of matrices and instances, plus the seeded generator.

Matrix file format: first line is ``rows cols``; each following line is
one row with single-space separated entries; tokens are decimal literals
plus ``-inf``/``+inf`` (case-insensitive); lines starting with ``#`` are
comments.  Output always ends with a newline and is byte-stable for a
given matrix, so formatted corpora diff cleanly.

Random instances come from a PCG64 stream (numpy's Generator) seeded
with the 64-bit config seed.  The draw order is fixed: for each term k,
the left factor then the right factor (values, then the -inf mask, then
its repair); afterwards the witness X0 (construction mode) or C (raw
mode).  Identical configs therefore yield byte-identical files.
"""

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .matrix import TropicalMatrix
from .semiring import NEG_INF, format_scalar, parse_scalar
from .solver import SylvesterInstance, sylvester_apply

GENERATOR_MODES = ("solvable_by_construction", "raw_random")


class ParseError(ValueError):
    """Malformed matrix text; the message names the offending line."""


def parse_matrix(text: str) -> TropicalMatrix:
    """Parse the text format into a matrix; errors carry line numbers."""
    header = None
    rows: list[list[float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: header must be 'rows cols', got {raw!r}")
            try:
                r, c = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: header must be two integers, got {raw!r}") from None
            if r < 1 or c < 1:
                raise ParseError(f"line {lineno}: dimensions must be positive, got {r}x{c}")
            header = (r, c)
            continue
        if len(rows) == header[0]:
            raise ParseError(f"line {lineno}: more than the declared {header[0]} rows")
        if len(parts) != header[1]:
            raise ParseError(f"line {lineno}: expected {header[1]} entries, got {len(parts)}")
        try:
            rows.append([parse_scalar(token) for token in parts])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if header is None:
        raise ParseError("line 1: no header found")
    if len(rows) != header[0]:
        raise ParseError(f"expected {header[0]} rows, found {len(rows)}")
    return TropicalMatrix(rows)


def format_matrix(M: TropicalMatrix) -> str:
    """Inverse of :func:`parse_matrix`; round-trips bit-exactly."""
    lines = [f"{M.rows} {M.cols}"]
    for row in M.tolist():
        lines.append(" ".join(format_scalar(v) for v in row))
    return "\n".join(lines) + "\n"


def load_matrix(path) -> TropicalMatrix:
    return parse_matrix(Path(path).read_text())


def save_matrix(path, M: TropicalMatrix) -> None:
    Path(path).write_text(format_matrix(M), newline="\n")


@dataclass(frozen=True)
class InstanceFileSet:
    """Paths of the p left factors, p right factors and C, in term order."""

    a_paths: tuple[Path, ...]
    b_paths: tuple[Path, ...]
    c_path: Path

    def __post_init__(self):
        object.__setattr__(self, "a_paths", tuple(Path(p) for p in self.a_paths))
        object.__setattr__(self, "b_paths", tuple(Path(p) for p in self.b_paths))
        object.__setattr__(self, "c_path", Path(self.c_path))
        if len(self.a_paths) != len(self.b_paths):
            raise ValueError(f"need as many A files as B files, got {len(self.a_paths)} and {len(self.b_paths)}")
        if not self.a_paths:
            raise ValueError("need at least one term")

    def load(self) -> SylvesterInstance:
        return SylvesterInstance(
            A=tuple(load_matrix(p) for p in self.a_paths),
            B=tuple(load_matrix(p) for p in self.b_paths),
            C=load_matrix(self.c_path),
        )


def standard_file_set(directory, p: int) -> InstanceFileSet:
    """File set under the A1.txt/B1.txt/C.txt naming used by the CLI."""
    d = Path(directory)
    return InstanceFileSet(
        a_paths=tuple(d / f"A{k}.txt" for k in range(1, p + 1)),
        b_paths=tuple(d / f"B{k}.txt" for k in range(1, p + 1)),
        c_path=d / "C.txt",
    )


@dataclass(frozen=True)
class GeneratorConfig:
    """Knobs of the seeded instance generator; integer-valued entries only."""

    m: int
    n: int
    p: int
    seed: int
    entry_low: int = -10
    entry_high: int = 10
    neginf_density: float = 0.1
    mode: str = "solvable_by_construction"

    def __post_init__(self):
        for name in ("m", "n", "p"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if not isinstance(self.entry_low, int) or not isinstance(self.entry_high, int):
            raise ValueError("entry bounds must be integers")
        if self.entry_low > self.entry_high:
            raise ValueError(f"entry_low {self.entry_low} exceeds entry_high {self.entry_high}")
        if not 0.0 <= self.neginf_density < 1.0:
            raise ValueError(f"neginf_density must lie in [0, 1), got {self.neginf_density}")
        if self.mode not in GENERATOR_MODES:
            raise ValueError(f"mode must be one of {GENERATOR_MODES}, got {self.mode!r}")


def _draw_doubly_r_astic(rng, size: int, cfg: GeneratorConfig) -> TropicalMatrix:
    values = rng.integers(cfg.entry_low, cfg.entry_high, endpoint=True, size=(size, size))
    values = values.astype(np.float64)
    mask = rng.random(size=(size, size)) < cfg.neginf_density
    # repair rows first, then columns; unmasking only, so fixes never undo
    for i in range(size):
        if mask[i].all():
            mask[i, int(rng.integers(size))] = False
    for j in range(size):
        if mask[:, j].all():
            mask[int(rng.integers(size)), j] = False
    values[mask] = NEG_INF
    return TropicalMatrix(values)


def _draw_finite(rng, rows: int, cols: int, cfg: GeneratorConfig) -> TropicalMatrix:
    values = rng.integers(cfg.entry_low, cfg.entry_high, endpoint=True, size=(rows, cols))
    return TropicalMatrix(values.astype(np.float64))


def generate_instance(cfg: GeneratorConfig):
    """Draw a random instance; deterministic for a fixed config.

    In solvable_by_construction mode C is the equation's left side at a
    random finite X0, which is returned as the witness; in raw_random
    mode C is drawn independently and the witness is None.
    """
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    A_terms, B_terms = [], []
    for _ in range(cfg.p):
        A_terms.append(_draw_doubly_r_astic(rng, cfg.m, cfg))
        B_terms.append(_draw_doubly_r_astic(rng, cfg.n, cfg))
    if cfg.mode == "solvable_by_construction":
        witness = _draw_finite(rng, cfg.m, cfg.n, cfg)
        C = sylvester_apply(A_terms, B_terms, witness)
    else:
        witness = None
        C = _draw_finite(rng, cfg.m, cfg.n, cfg)
    return SylvesterInstance(A=tuple(A_terms), B=tuple(B_terms), C=C), witness


def write_instance(directory, inst: SylvesterInstance, witness=None) -> list[Path]:
    """Write A1..Ap, B1..Bp, C (and X0 when given) under ``directory``."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for k in range(inst.p):
        for name, M in ((f"A{k + 1}.txt", inst.A[k]), (f"B{k + 1}.txt", inst.B[k])):
            save_matrix(d / name, M)
            written.append(d / name)
    save_matrix(d / "C.txt", inst.C)
    written.append(d / "C.txt")
    if witness is not None:
        save_matrix(d / "X0.txt", witness)
        written.append(d / "X0.txt")
    return written
