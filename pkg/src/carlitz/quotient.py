"""Residue rings A/pi^n, quotient rings K[y]/(m), and multiplication-matrix
norms.

The norm of an element u of K[y]/(m) is the determinant of multiplication by
u on the power basis 1, y, ..., y^(deg m - 1).  The same matrix construction
applies when u has polynomial or truncated-series coefficients in a second
variable; the determinant is then expanded division-free (cofactors), which
is what the Coleman norm route needs.
"""

from __future__ import annotations

from itertools import permutations

from .poly import Poly, is_irreducible
from .series import TruncSeries

__all__ = [
    "ResidueRing",
    "ResidueElem",
    "QuotientRing",
    "QuotElem",
    "quotient_norm",
    "det_field",
    "det_ring",
    "solve_linear",
]


class ResidueRing:
    """A/pi^n for a monic irreducible pi in F_q[T]."""

    is_field = False

    def __init__(self, pi: Poly, n: int) -> None:
        # n = 0 is the trivial quotient A/(1): a single class, key 0
        if n < 0:
            raise ValueError("level must be >= 0")
        if not pi.is_monic() or not is_irreducible(pi):
            raise ValueError(f"{pi!r} is not monic irreducible")
        self.fq = pi.ring
        self.var = pi.var
        self.pi = pi
        self.n = n
        self.modulus = pi ** n
        self.zero = ResidueElem(self, Poly(self.fq, self.var, []))
        self.one = ResidueElem(self, Poly(self.fq, self.var, [self.fq.one]))

    def reduce(self, poly: Poly) -> Poly:
        return poly % self.modulus

    def mul_key(self, a: Poly, b: Poly) -> Poly:
        """Product of two canonical representatives, reduced."""
        return (a * b) % self.modulus

    def is_unit_key(self, a: Poly) -> bool:
        if self.n == 0:
            return True
        return not (a % self.pi).is_zero()

    def inv_key(self, a: Poly) -> Poly:
        g, u, _ = a.egcd(self.modulus)
        if g.degree != 0:
            raise ZeroDivisionError(f"{a!r} is not a unit mod pi^{self.n}")
        return (u.mul_scalar(g.constant ** -1)) % self.modulus

    def pow_key(self, a: Poly, e: int) -> Poly:
        if e < 0:
            return self.pow_key(self.inv_key(a), -e)
        result = self.one.rep
        base = self.reduce(a)
        while e:
            if e & 1:
                result = self.mul_key(result, base)
            if e > 1:
                base = self.mul_key(base, base)
            e >>= 1
        return result

    def residues(self) -> list[Poly]:
        from .poly import all_residues
        return all_residues(self.fq, self.n * self.pi.degree, self.var)

    def unit_residues(self) -> list[Poly]:
        """Canonical representatives of (A/pi^n)^*, in enumeration order."""
        return [a for a in self.residues() if self.is_unit_key(a)]

    def coerce(self, x) -> "ResidueElem":
        if isinstance(x, ResidueElem):
            if x.ring != self:
                raise ValueError("element of a different residue ring")
            return x
        if isinstance(x, Poly):
            return ResidueElem(self, self.reduce(x))
        if isinstance(x, int):
            return ResidueElem(
                self, Poly(self.fq, self.var, [self.fq.from_int(x)]))
        raise TypeError(f"cannot coerce {x!r}")

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ResidueRing) and other.pi == self.pi
                and other.n == self.n)

    def __hash__(self) -> int:
        return hash(("ResidueRing", self.pi, self.n))

    def __repr__(self) -> str:
        return f"ResidueRing({self.pi!r}, {self.n})"


class ResidueElem:
    __slots__ = ("ring", "rep")

    def __init__(self, ring: ResidueRing, rep: Poly) -> None:
        self.ring = ring
        self.rep = rep

    def __add__(self, other: "ResidueElem") -> "ResidueElem":
        return ResidueElem(self.ring, self.ring.reduce(self.rep + other.rep))

    def __sub__(self, other: "ResidueElem") -> "ResidueElem":
        return ResidueElem(self.ring, self.ring.reduce(self.rep - other.rep))

    def __neg__(self) -> "ResidueElem":
        return ResidueElem(self.ring, self.ring.reduce(-self.rep))

    def __mul__(self, other: "ResidueElem") -> "ResidueElem":
        return ResidueElem(self.ring, self.ring.mul_key(self.rep, other.rep))

    def __pow__(self, e: int) -> "ResidueElem":
        return ResidueElem(self.ring, self.ring.pow_key(self.rep, e))

    def is_unit(self) -> bool:
        return self.ring.is_unit_key(self.rep)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ResidueElem) and other.ring == self.ring
                and other.rep == self.rep)

    def __hash__(self) -> int:
        return hash((self.rep, self.ring.n))

    def __repr__(self) -> str:
        return f"[{self.rep!r}]"


class QuotientRing:
    """K[y]/(modulus) over a field parent K; not assumed to be a field."""

    is_field = False

    def __init__(self, modulus: Poly) -> None:
        if not modulus.is_monic() or modulus.degree < 1:
            raise ValueError("modulus must be monic of positive degree")
        self.K = modulus.ring
        self.var = modulus.var
        self.modulus = modulus
        self.degree = modulus.degree
        self.zero = QuotElem(self, Poly(self.K, self.var, []))
        self.one = QuotElem(self, Poly(self.K, self.var, [self.K.one]))

    def coerce(self, x) -> "QuotElem":
        if isinstance(x, QuotElem):
            if x.ring != self:
                raise ValueError("element of a different quotient ring")
            return x
        if isinstance(x, Poly) and x.var == self.var and x.ring == self.K:
            return QuotElem(self, x % self.modulus)
        # anything else (including base-ring polynomials) must embed in K
        c = self.K.coerce(x)
        return QuotElem(self, Poly(self.K, self.var, [c]))

    def gen(self) -> "QuotElem":
        return QuotElem(self, Poly.gen(self.K, self.var) % self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuotientRing) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(("QuotientRing", self.modulus))

    def __repr__(self) -> str:
        return f"QuotientRing({self.modulus!r})"


class QuotElem:
    __slots__ = ("ring", "rep")

    def __init__(self, ring: QuotientRing, rep: Poly) -> None:
        self.ring = ring
        self.rep = rep

    def __add__(self, other: "QuotElem") -> "QuotElem":
        return QuotElem(self.ring, self.rep + other.rep)

    def __sub__(self, other: "QuotElem") -> "QuotElem":
        return QuotElem(self.ring, self.rep - other.rep)

    def __neg__(self) -> "QuotElem":
        return QuotElem(self.ring, -self.rep)

    def __mul__(self, other: "QuotElem") -> "QuotElem":
        return QuotElem(self.ring, (self.rep * other.rep) % self.ring.modulus)

    def inv(self) -> "QuotElem":
        g, u, _ = self.rep.egcd(self.ring.modulus)
        if g.degree != 0:
            raise ZeroDivisionError(
                f"{self.rep!r} is not invertible mod {self.ring.modulus!r}")
        return QuotElem(self.ring,
                        (u.mul_scalar(g.constant ** -1)) % self.ring.modulus)

    def __truediv__(self, other: "QuotElem") -> "QuotElem":
        return self * other.inv()

    def __pow__(self, e: int) -> "QuotElem":
        if e < 0:
            return self.inv() ** (-e)
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            if e > 1:
                base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, QuotElem) and other.ring == self.ring
                and other.rep == self.rep)

    def __hash__(self) -> int:
        return hash(("QuotElem", self.rep))

    def __repr__(self) -> str:
        return f"<{self.rep!r}>"


# -- determinants and linear solve --------------------------------------------

def det_field(mat: list[list], ring):
    """Gaussian-elimination determinant over a field parent."""
    n = len(mat)
    rows = [list(r) for r in mat]
    zero, one = ring.zero, ring.one
    det = one
    for col in range(n):
        piv = None
        for r in range(col, n):
            if rows[r][col] != zero:
                piv = r
                break
        if piv is None:
            return zero
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        pivot = rows[col][col]
        det = det * pivot
        pinv = pivot ** -1
        for r in range(col + 1, n):
            factor = rows[r][col]
            if factor == zero:
                continue
            scale = factor * pinv
            for c in range(col, n):
                rows[r][c] = rows[r][c] - scale * rows[col][c]
    return det


_DET_RING_LIMIT = 6


def det_ring(mat: list[list], zero):
    """Division-free determinant (permutation expansion); small dimensions."""
    n = len(mat)
    if n > _DET_RING_LIMIT:
        raise ValueError(f"ring determinant limited to {_DET_RING_LIMIT}x"
                         f"{_DET_RING_LIMIT}, got {n}")
    if n == 0:
        raise ValueError("empty matrix")
    acc = zero
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        term = mat[0][perm[0]]
        for r in range(1, n):
            term = term * mat[r][perm[r]]
        acc = acc + term if sign > 0 else acc - term
    return acc


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def solve_linear(mat: list[list], rhs: list, ring) -> list:
    """Solve an R x C system (R >= C) over a field parent; raises on an
    inconsistent or rank-deficient system."""
    nrows, ncols = len(mat), len(mat[0]) if mat else 0
    rows = [list(mat[r]) + [rhs[r]] for r in range(nrows)]
    zero = ring.zero
    rank_row = 0
    pivots = []
    for col in range(ncols):
        piv = None
        for r in range(rank_row, nrows):
            if rows[r][col] != zero:
                piv = r
                break
        if piv is None:
            raise ValueError("rank-deficient linear system")
        rows[rank_row], rows[piv] = rows[piv], rows[rank_row]
        pinv = rows[rank_row][col] ** -1
        rows[rank_row] = [v * pinv for v in rows[rank_row]]
        for r in range(nrows):
            if r != rank_row and rows[r][col] != zero:
                factor = rows[r][col]
                rows[r] = [rows[r][c] - factor * rows[rank_row][c]
                           for c in range(ncols + 1)]
        pivots.append(col)
        rank_row += 1
    for r in range(rank_row, nrows):
        if rows[r][ncols] != zero:
            raise ValueError("inconsistent linear system")
    return [rows[i][ncols] for i in range(ncols)]


# -- multiplication-matrix norms ----------------------------------------------

def quotient_norm(elem):
    """Norm down to K (or to K-coefficient polynomials/series).

    * QuotElem u: det of multiplication by u on K[y]/(m); lands in K.
    * Poly/TruncSeries in a second variable with QuotElem coefficients:
      same matrix with polynomial (resp. series) entries, expanded
      division-free; lands in K[x] (resp. series over K).
    """
    if isinstance(elem, QuotElem):
        qr = elem.ring
        n = qr.degree
        ybar = qr.gen()
        mat = [[qr.K.zero] * n for _ in range(n)]
        col = qr.one * elem
        for j in range(n):
            rep = col.rep
            for i in range(n):
                mat[i][j] = rep.coeff(i)
            col = col * ybar
        return det_field(mat, qr.K)
    if isinstance(elem, Poly) and isinstance(elem.ring, QuotientRing):
        qr = elem.ring
        entries = _mult_matrix_coeffs(qr, elem.coeffs)
        n = qr.degree
        mat = [[Poly(qr.K, elem.var, entries[(i, j)])
                for j in range(n)] for i in range(n)]
        zero = Poly(qr.K, elem.var, [])
        return det_ring(mat, zero)
    if isinstance(elem, TruncSeries) and isinstance(elem.ring, QuotientRing):
        qr = elem.ring
        entries = _mult_matrix_coeffs(qr, elem.coeffs)
        n = qr.degree
        mat = [[TruncSeries(qr.K, elem.var, elem.order, entries[(i, j)],
                            elem.prec)
                for j in range(n)] for i in range(n)]
        zero = TruncSeries.zero(qr.K, elem.var, elem.prec)
        return det_ring(mat, zero)
    raise TypeError(f"cannot take a quotient norm of {elem!r}")


def _mult_matrix_coeffs(qr: QuotientRing, coeffs):
    """entries[(i, j)][k] = row-i component of c_k * ybar^j, for each stored
    second-variable index k."""
    n = qr.degree
    width = len(coeffs)
    ypow = qr.one
    ybar = qr.gen()
    entries: dict[tuple[int, int], list] = {
        (i, j): [qr.K.zero] * width for i in range(n) for j in range(n)
    }
    for j in range(n):
        for k, ck in enumerate(coeffs):
            rep = (ck * ypow).rep
            for i in range(n):
                entries[(i, j)][k] = rep.coeff(i)
        ypow = ypow * ybar
    return entries
