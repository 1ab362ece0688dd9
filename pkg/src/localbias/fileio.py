"""Text file formats for cube functions, binary codes, lattice colorings
and Cayley-Z colorings.

  cube file:    `cube <n>` then one line of 2^n characters over {+,-},
                character v = sign of f(v).
  code file:    `code <n>` then one codeword per line as an n-character
                {0,1} string, coordinate i at character i-1.
  lattice file: `lattice <n> <P_1> ... <P_n>` then the row-major sign
                string of the cell (coordinate 1 slowest).
  cayley file:  `cayleyz <P> <s_1> ... <s_k>` then P signs.
"""

from __future__ import annotations

import numpy as np

from .codes import BinaryCode
from .cube import CubeFunction
from .lattice import CayleyZFunction, PeriodicLatticeFunction


class ParseError(ValueError):
    """Malformed artifact file; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _sign_string(values) -> str:
    return "".join("+" if v > 0 else "-" for v in values)


def _parse_signs(text: str, line: int) -> np.ndarray:
    if set(text) - set("+-"):
        raise ParseError(line, "sign string must use only '+' and '-'")
    return np.array([1 if c == "+" else -1 for c in text], dtype=np.int8)


def _lines(text: str) -> list:
    return [ln.strip() for ln in text.strip().splitlines()]


def format_cube(f: CubeFunction) -> str:
    return f"cube {f.n}\n{_sign_string(f.table)}\n"


def parse_cube(text: str) -> CubeFunction:
    lines = _lines(text)
    if len(lines) != 2:
        raise ParseError(len(lines) or 1, "cube file needs exactly 2 lines")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "cube" or not head[1].isdigit():
        raise ParseError(1, "expected header 'cube <n>'")
    n = int(head[1])
    table = _parse_signs(lines[1], 2)
    if table.shape[0] != 1 << n:
        raise ParseError(2, f"expected 2^{n} signs, got {table.shape[0]}")
    return CubeFunction(n, table)


def format_code(code: BinaryCode) -> str:
    out = [f"code {code.n}"]
    for w in code.sorted_words():
        out.append("".join("1" if (w >> i) & 1 else "0" for i in range(code.n)))
    return "\n".join(out) + "\n"


def parse_code(text: str) -> BinaryCode:
    lines = _lines(text)
    if not lines:
        raise ParseError(1, "empty code file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "code" or not head[1].isdigit():
        raise ParseError(1, "expected header 'code <n>'")
    n = int(head[1])
    words = set()
    for ln, row in enumerate(lines[1:], start=2):
        if len(row) != n or set(row) - set("01"):
            raise ParseError(ln, f"codeword must be {n} characters over 0/1")
        words.add(sum(1 << i for i, c in enumerate(row) if c == "1"))
    return BinaryCode(n, frozenset(words))


def format_lattice(g: PeriodicLatticeFunction) -> str:
    head = " ".join(["lattice", str(g.n)] + [str(p) for p in g.periods])
    return f"{head}\n{_sign_string(g.cell.reshape(-1))}\n"


def parse_lattice(text: str) -> PeriodicLatticeFunction:
    lines = _lines(text)
    if len(lines) != 2:
        raise ParseError(len(lines) or 1, "lattice file needs exactly 2 lines")
    head = lines[0].split()
    if len(head) < 3 or head[0] != "lattice" or not all(t.isdigit() for t in head[1:]):
        raise ParseError(1, "expected header 'lattice <n> <P_1> ... <P_n>'")
    n = int(head[1])
    periods = tuple(int(t) for t in head[2:])
    if len(periods) != n:
        raise ParseError(1, f"expected {n} periods, got {len(periods)}")
    cell = _parse_signs(lines[1], 2)
    expected = int(np.prod(periods))
    if cell.shape[0] != expected:
        raise ParseError(2, f"expected {expected} signs, got {cell.shape[0]}")
    return PeriodicLatticeFunction(n, periods, cell.reshape(periods))


def format_cayley(f: CayleyZFunction) -> str:
    head = " ".join(["cayleyz", str(f.period)] + [str(s) for s in f.generators])
    return f"{head}\n{f.pattern_string()}\n"


def parse_cayley(text: str) -> CayleyZFunction:
    lines = _lines(text)
    if len(lines) != 2:
        raise ParseError(len(lines) or 1, "cayley file needs exactly 2 lines")
    head = lines[0].split()
    if len(head) < 3 or head[0] != "cayleyz" or not all(t.isdigit() for t in head[1:]):
        raise ParseError(1, "expected header 'cayleyz <P> <s_1> ... <s_k>'")
    period = int(head[1])
    gens = tuple(int(t) for t in head[2:])
    pattern = _parse_signs(lines[1], 2)
    if pattern.shape[0] != period:
        raise ParseError(2, f"expected {period} signs, got {pattern.shape[0]}")
    return CayleyZFunction(period, gens, pattern)


def write_text(path, text: str):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def read_text(path) -> str:
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()
