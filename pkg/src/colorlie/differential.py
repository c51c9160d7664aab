"""The Koszul-dual differential graded algebra of a color Lie algebra.

The differential is stored on generators only: d f_k = sum_{i<=j} c_ij^k
f_i f_j.  On a basis monomial written as its ascending word x_1...x_d it acts
letterwise,

    d(x_1...x_d) = sum_p sign(p) x_1...x_{p-1} (d x_p) x_{p+1}...x_d,

where sign(p) is the commutation factor of the prefix against the
differentiated generator, sign(p) = prod_{r<p} eps(x_r, x_p).  (The plain
homological sign (-1)^(p-1) fails the parameterized catalog rows; the
commutation-factor variant reproduces the reference cocycle data, see the
calibration tests.)  Products are normalized through the sign algebra, which
contributes the remaining transposition signs.
"""

from __future__ import annotations

from .dual import DgaElement, dual_of, monomial_basis, multiply
from .linalg import ExactMatrix, FIELD_Q, FIELD_QT
from .scalars import ONE


class Differential:
    def __init__(self, algebra, cm, on_generators):
        self.algebra = algebra
        self.cm = cm
        self.on_generators = list(on_generators)
        for el in self.on_generators:
            if not el.is_zero() and el.degree() != 2:
                raise ValueError("d of a generator must be homogeneous of degree 2")

    def has_parameter(self):
        return any(c.depends_on_param()
                   for el in self.on_generators for c in el.coeffs.values())

    def field(self):
        return FIELD_QT if self.has_parameter() else FIELD_Q

    def _word(self, mono):
        out = []
        for i, a in enumerate(mono):
            out.extend([i] * a)
        return out

    def apply_monomial(self, mono):
        """d of one basis monomial, by the letterwise expansion."""
        alg = self.algebra
        word = self._word(mono)
        acc = {}
        prefix = [0] * alg.n
        for p, letter in enumerate(word):
            dgen = self.on_generators[letter]
            if not dgen.is_zero():
                sign = 1
                for r in range(p):
                    sign *= self.cm.s[word[r]][letter]
                suffix = [0] * alg.n
                for r in range(p + 1, len(word)):
                    suffix[word[r]] += 1
                suffix = tuple(suffix)
                pre = tuple(prefix)
                for dmono, c in dgen.coeffs.items():
                    s1, m1 = alg.multiply_monomials(pre, dmono)
                    if s1 == 0:
                        continue
                    s2, m2 = alg.multiply_monomials(m1, suffix)
                    if s2 == 0:
                        continue
                    coef = c if sign * s1 * s2 == 1 else -c
                    prev = acc.get(m2)
                    total = coef if prev is None else prev + coef
                    if total.is_zero():
                        acc.pop(m2, None)
                    else:
                        acc[m2] = total
            prefix[letter] += 1
        out = DgaElement(alg)
        out.coeffs = acc
        return out

    def apply(self, x):
        """Linear extension of the monomial action; degree +1, d(1) = 0."""
        out = DgaElement(self.algebra)
        for mono, c in x.coeffs.items():
            out = out + self.apply_monomial(mono).scale(c)
        return out

    def partial(self, x, k):
        """The summand of d that differentiates only letters equal to f_k."""
        alg = self.algebra
        out = DgaElement(alg)
        dgen = self.on_generators[k]
        if dgen.is_zero():
            return out
        for mono, c in x.coeffs.items():
            word = self._word(mono)
            for p, letter in enumerate(word):
                if letter != k:
                    continue
                sign = 1
                for r in range(p):
                    sign *= self.cm.s[word[r]][letter]
                prefix = [0] * alg.n
                for r in range(p):
                    prefix[word[r]] += 1
                suffix = [0] * alg.n
                for r in range(p + 1, len(word)):
                    suffix[word[r]] += 1
                piece = multiply(DgaElement(alg, {tuple(prefix): ONE}), dgen)
                piece = multiply(piece, DgaElement(alg, {tuple(suffix): ONE}))
                out = out + piece.scale(c if sign == 1 else -c)
        return out

    def matrix(self, n):
        """Matrix of d on monomial_basis(n), columns indexed by the basis."""
        cols = monomial_basis(self.algebra, n)
        rows = monomial_basis(self.algebra, n + 1)
        index = {m: i for i, m in enumerate(rows)}
        mat = ExactMatrix(len(rows), len(cols), field=self.field())
        for j, mono in enumerate(cols):
            image = self.apply_monomial(mono)
            for m, c in image.coeffs.items():
                mat[index[m], j] = c
        return DifferentialMatrix(n, mat, rows, cols)


class DifferentialMatrix:
    def __init__(self, degree, matrix, row_basis, col_basis):
        self.degree = degree
        self.matrix = matrix
        self.row_basis = row_basis
        self.col_basis = col_basis


def differential_from_brackets(g):
    """d f_k = sum_{i<j} c_ij^k f_i f_j + sum_i c_ii^k f_i^2 on dual_of(g);
    terms with capped squares vanish automatically."""
    alg = dual_of(g)
    gens = []
    for k in range(g.n):
        el = DgaElement(alg)
        for (i, j), vec in g.brackets.items():
            c = vec[k]
            if c.is_zero():
                continue
            mono = [0] * g.n
            mono[i] += 1
            mono[j] += 1
            sign, total = alg.multiply_monomials(
                tuple(1 if t == i else 0 for t in range(g.n)),
                tuple(1 if t == j else 0 for t in range(g.n)))
            if sign == 0:
                continue
            el = el + DgaElement(alg, {tuple(mono): c if sign == 1 else -c})
        gens.append(el)
    return Differential(alg, g.cm, gens)


def apply_differential(d, x):
    return d.apply(x)


def differential_matrix(d, n):
    return d.matrix(n)


def check_d_squared(d, nmax):
    """True iff matrix(n+1) . matrix(n) = 0 for all n <= nmax."""
    prev = d.matrix(0)
    for n in range(nmax + 1):
        nxt = d.matrix(n + 1)
        if prev.matrix.rows and prev.matrix.cols:
            if not nxt.matrix.mul(prev.matrix).is_zero():
                return False
        prev = nxt
    return True
