"""The `rankcode v1` text format for rank-metric codes.

    rankcode v1
    q <p> <e> [c_0 c_1 ... c_e]
    n <n> m <m>
    matrix
    <n rows of m whitespace-separated entries>
    matrix
    ...

Entries are integers for prime fields and dot-joined coefficient tuples
(c0.c1...) for extension fields.  The modulus coefficients are optional; when
omitted the canonical field for (p, e) is used.  Lines starting with `#` are
comments.  The parser rejects n > m; printing always emits the canonical
basis, so parse(print(C)) == C.
"""

from __future__ import annotations

from typing import Iterable

from .codes import RankMetricCode, from_generators
from .errors import CodeFileError
from .fields import field_with_modulus, make_field
from .matrices import MatrixOverFq

MAGIC = "rankcode v1"


def write_code(C: RankMetricCode, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(MAGIC)
    spec = C.spec
    if spec.e == 1:
        lines.append(f"q {spec.p} 1")
    else:
        lines.append(f"q {spec.p} {spec.e} " + " ".join(str(c) for c in spec.modulus))
    lines.append(f"n {C.n} m {C.m}")
    for B in C.basis:
        lines.append("matrix")
        for row in B.entries:
            lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> RankMetricCode:
    """Parse the format above; raises CodeFileError with the offending line."""
    numbered = [
        (i + 1, line.strip())
        for i, line in enumerate(text.splitlines())
        if line.strip() and not line.strip().startswith("#")
    ]
    pos = 0

    def take(what: str) -> tuple[int, str]:
        nonlocal pos
        if pos >= len(numbered):
            last = numbered[-1][0] if numbered else 1
            raise CodeFileError(last, f"unexpected end of file, expected {what}")
        entry = numbered[pos]
        pos += 1
        return entry

    lineno, line = take("header")
    if line != MAGIC:
        raise CodeFileError(lineno, f"expected {MAGIC!r}")

    lineno, line = take("field line")
    tokens = line.split()
    if len(tokens) < 3 or tokens[0] != "q":
        raise CodeFileError(lineno, "expected 'q <p> <e> [modulus coeffs]'")
    try:
        p, e = int(tokens[1]), int(tokens[2])
        coeffs = [int(t) for t in tokens[3:]]
    except ValueError:
        raise CodeFileError(lineno, "field parameters must be integers") from None
    try:
        if coeffs:
            spec = field_with_modulus(p, e, coeffs)
        else:
            spec = make_field(p, e)
    except ValueError as exc:
        raise CodeFileError(lineno, str(exc)) from None

    lineno, line = take("shape line")
    tokens = line.split()
    if len(tokens) != 4 or tokens[0] != "n" or tokens[2] != "m":
        raise CodeFileError(lineno, "expected 'n <n> m <m>'")
    try:
        n, m = int(tokens[1]), int(tokens[3])
    except ValueError:
        raise CodeFileError(lineno, "shape parameters must be integers") from None
    if n < 1 or m < 1:
        raise CodeFileError(lineno, "shape must be positive")
    if n > m:
        raise CodeFileError(lineno, f"n = {n} exceeds m = {m}")

    matrices = []
    while pos < len(numbered):
        lineno, line = take("matrix block")
        if line != "matrix":
            raise CodeFileError(lineno, "expected 'matrix'")
        rows = []
        for _ in range(n):
            lineno, line = take("matrix row")
            tokens = line.split()
            if len(tokens) != m:
                raise CodeFileError(lineno, f"expected {m} entries, got {len(tokens)}")
            try:
                rows.append([spec.parse_element(t) for t in tokens])
            except ValueError as exc:
                raise CodeFileError(lineno, str(exc)) from None
        matrices.append(MatrixOverFq.from_rows(spec, rows))
    return from_generators(spec, n, m, matrices)


def read_code(path) -> RankMetricCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code(fh.read())


def write_code_file(C: RankMetricCode, path, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_code(C, comments))
