"""Small exact linear algebra kernel.

Matrices are plain lists of lists whose entries support +, -, *, /, ==
and truth testing (CycScalar and Fraction both qualify).  Everything here
is exact; nothing ever rounds.
"""
from __future__ import annotations


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row_a = a[i]
        row = []
        for j in range(m):
            acc = None
            for s in range(k):
                x = row_a[s]
                if not x:
                    continue
                term = x * b[s][j]
                acc = term if acc is None else acc + term
            if acc is None:
                acc = row_a[0] * 0
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        acc = row[0] * 0
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_is_zero(a):
    return all(not x for row in a for x in row)


def mat_identity(n, one):
    zero = one * 0
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_inverse(a):
    """Gauss-Jordan inverse over a field; raises on singular input."""
    n = len(a)
    one = None
    for row in a:
        for x in row:
            if x:
                one = x / x
                break
        if one is not None:
            break
    if one is None:
        raise ZeroDivisionError("singular matrix")
    work = [list(row) for row in a]
    inv = mat_identity(n, one)
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        work[col], work[piv] = work[piv], work[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = work[col][col].inverse() if hasattr(work[col][col], "inverse") else 1 / work[col][col]
        work[col] = [x * scale for x in work[col]]
        inv[col] = [x * scale for x in inv[col]]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
    return inv


class RowSpan:
    """Incremental row space with exact elimination.

    Feed vectors with add(); the rank is the number kept.  Optionally
    remembers the expression of each pivot row in terms of the fed
    vectors, which solve() uses to write a new vector in that basis.
    """

    def __init__(self, track_combinations=False):
        self.pivots = {}  # leading index -> (vector, combination | None)
        self.count = 0
        self.track = track_combinations

    @property
    def rank(self):
        return len(self.pivots)

    def _eliminate(self, vec, combo):
        vec = list(vec)
        for lead in sorted(self.pivots):
            if lead >= len(vec):
                break
            if vec[lead]:
                pivot_vec, pivot_combo = self.pivots[lead]
                f = vec[lead]
                for i in range(lead, len(vec)):
                    if pivot_vec[i]:
                        vec[i] = vec[i] - f * pivot_vec[i]
                if combo is not None:
                    for k, c in pivot_combo.items():
                        combo[k] = combo.get(k, 0) - f * c
        return vec, combo

    def add(self, vec):
        """Insert a vector; returns True if it enlarged the span."""
        combo = {self.count: 1} if self.track else None
        self.count += 1
        vec, combo = self._eliminate(vec, combo)
        lead = next((i for i, x in enumerate(vec) if x), None)
        if lead is None:
            return False
        inv = vec[lead].inverse() if hasattr(vec[lead], "inverse") else 1 / vec[lead]
        vec = [x * inv for x in vec]
        if combo is not None:
            combo = {k: c * inv for k, c in combo.items() if c}
        self.pivots[lead] = (vec, combo)
        return True

    def contains(self, vec):
        vec, _ = self._eliminate(list(vec), None)
        return all(not x for x in vec)

    def solve(self, vec):
        """Coefficients over the fed vectors reproducing vec, or None."""
        if not self.track:
            raise ValueError("span was built without combination tracking")
        combo = {}
        vec = list(vec)
        for lead in sorted(self.pivots):
            if lead >= len(vec):
                break
            if vec[lead]:
                pivot_vec, pivot_combo = self.pivots[lead]
                f = vec[lead]
                for i in range(lead, len(vec)):
                    if pivot_vec[i]:
                        vec[i] = vec[i] - f * pivot_vec[i]
                for k, c in pivot_combo.items():
                    combo[k] = combo.get(k, 0) + f * c
        if any(vec):
            return None
        return combo


def flatten(mat):
    return [x for row in mat for x in row]


def rank_of_matrices(mats):
    span = RowSpan()
    for m in mats:
        span.add(flatten(m))
    return span.rank
