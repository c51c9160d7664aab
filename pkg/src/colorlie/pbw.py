"""Quadratic-linear relations of U(g), Diamond-Lemma certification and
normal words.

Monomial order: degree-lexicographic with v_0 > v_1 > ... > v_{n-1}, so the
leading monomial of v_i v_j - s_ij v_j v_i - sum_k c_ij^k v_k (i < j) is
v_i v_j, and normal words are the non-increasing index sequences.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ONE, Scalar, ZERO, scalar_simplify

Word = tuple  # tuple of generator indices


def deglex_key(w):
    """Sort key for degree-lex with smaller index = bigger letter."""
    return (len(w), tuple(-i for i in w))


class QuadLinRelation:
    """A relation lead + (lower quadratic terms) + (linear part) = 0 with the
    leading coefficient normalized to 1."""

    def __init__(self, quadratic, linear):
        quad = {w: scalar_simplify(c) for w, c in quadratic.items()
                if not scalar_simplify(c).is_zero()}
        if not quad:
            raise ValueError("relation must have a quadratic part")
        for w in quad:
            if len(w) != 2:
                raise ValueError("only quadratic-linear relations are accepted")
        lead = max(quad, key=deglex_key)
        inv = ONE / quad[lead]
        self.lead = lead
        self.quadratic = {w: c * inv for w, c in quad.items()}
        self.linear = {k: scalar_simplify(c) * inv for k, c in linear.items()
                       if not scalar_simplify(c).is_zero()}

    def rewrite_rhs(self):
        """lead = -(other quadratic terms) - (linear part)."""
        terms = {w: -c for w, c in self.quadratic.items() if w != self.lead}
        for k, c in self.linear.items():
            terms[(k,)] = terms.get((k,), ZERO) - c
        return terms

    def element(self):
        el = dict(self.quadratic)
        for k, c in self.linear.items():
            el[(k,)] = c
        return el

    def __repr__(self):
        return "QuadLinRelation(lead=%r)" % (self.lead,)


def uea_relations(g):
    """Defining relations of U(g): v_i v_j - s_ij v_j v_i - <e_i, e_j> for
    i < j, and v_i^2 - (1/2)<e_i, e_i> where s_ii = -1."""
    rels = []
    n = g.n
    half = Scalar.from_fraction(Fraction(1, 2))
    for i in range(n):
        for j in range(i, n):
            if i == j:
                vec = g.brackets.get((i, i))
                if vec is None:
                    if g.cm.s[i][i] == -1:
                        rels.append(QuadLinRelation({(i, i): ONE}, {}))
                    continue
                if g.cm.s[i][i] != -1:
                    raise ValueError(
                        "diagonal bracket at %d with s[%d][%d] = +1" % (i, i, i))
                linear = {k: -half * c for k, c in enumerate(vec)}
                rels.append(QuadLinRelation({(i, i): ONE}, linear))
            else:
                vec = g.full_bracket(i, j)
                sgn = Scalar.from_fraction(-g.cm.s[i][j])
                linear = {k: -c for k, c in enumerate(vec)}
                rels.append(QuadLinRelation({(i, j): ONE, (j, i): sgn}, linear))
    return rels


def _find_lead(word, leads):
    for p in range(len(word) - 1):
        if word[p:p + 2] in leads:
            return p
    return None


def reduce_word(element, rels):
    """Normal form of a word or linear combination w.r.t. the relations.

    Each step replaces a leading-monomial factor by strictly smaller terms in
    the degree-lex order, so the loop terminates.
    """
    rules = {r.lead: r.rewrite_rhs() for r in rels}
    if len(rules) != len(rels):
        raise ValueError("relations must have distinct leading monomials")
    if isinstance(element, tuple):
        element = {element: ONE}
    todo = {w: scalar_simplify(c) for w, c in element.items()
            if not scalar_simplify(c).is_zero()}
    normal = {}
    while todo:
        w = max(todo, key=deglex_key)
        c = todo.pop(w)
        p = _find_lead(w, rules)
        if p is None:
            acc = normal.get(w, ZERO) + c
            if acc.is_zero():
                normal.pop(w, None)
            else:
                normal[w] = acc
            continue
        for piece, pc in rules[w[p:p + 2]].items():
            nw = w[:p] + piece + w[p + 2:]
            acc = todo.get(nw, ZERO) + c * pc
            if acc.is_zero():
                todo.pop(nw, None)
            else:
                todo[nw] = acc
    return normal


def _shift_left(element, letter):
    return {(letter,) + w: c for w, c in element.items()}


def _shift_right(element, letter):
    return {w + (letter,): c for w, c in element.items()}


def groebner_check(rels):
    """Diamond Lemma: reduce every s-polynomial of a length-3 overlap of
    leading monomials; returns (all_zero, failing overlap words)."""
    by_lead = {r.lead: r for r in rels}
    failures = []
    for (a, b), r1 in by_lead.items():
        for (b2, c), r2 in by_lead.items():
            if b2 != b:
                continue
            s = {}
            for w, coef in _shift_right(r1.element(), c).items():
                s[w] = s.get(w, ZERO) + coef
            for w, coef in _shift_left(r2.element(), a).items():
                s[w] = s.get(w, ZERO) - coef
            if reduce_word(s, rels):
                failures.append((a, b, c))
    return not failures, failures


def normal_words(rels, degree, n=None):
    """All degree-d words with no leading monomial as a factor, in index-lex
    order."""
    leads = {r.lead for r in rels}
    if n is None:
        n = _ngens(rels)
    if degree == 0:
        return [()]
    words = [(i,) for i in range(n)]
    for _ in range(degree - 1):
        words = [w + (i,) for w in words for i in range(n)
                 if (w[-1], i) not in leads]
    return words


def _ngens(rels):
    top = 0
    for r in rels:
        for w in r.quadratic:
            top = max(top, max(w) + 1)
        for k in r.linear:
            top = max(top, k + 1)
    return top


def word_str(w):
    """Render a word in grouped-exponent notation, e.g. v3^2*v1."""
    if not w:
        return "1"
    parts = []
    run, count = w[0], 0
    for i in w:
        if i == run:
            count += 1
        else:
            parts.append((run, count))
            run, count = i, 1
    parts.append((run, count))
    return "*".join("v%d" % (i + 1) if c == 1 else "v%d^%d" % (i + 1, c)
                    for i, c in parts)
