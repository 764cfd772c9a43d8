"""Smith normal form over the integers, exact Python-int arithmetic."""

from __future__ import annotations


def _as_rows(A) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in A]
    width = {len(r) for r in rows}
    if len(width) > 1:
        raise ValueError("ragged matrix")
    return rows


def smith_normal_form(A) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of ``A``, ``min(rows, cols)`` of them, all >= 0."""
    M = _as_rows(A)
    m = len(M)
    n = len(M[0]) if m else 0
    diag = []
    for t in range(min(m, n)):
        # pivot: smallest nonzero |entry| in the remaining block
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if M[i][j] and (pivot is None or abs(M[i][j]) < abs(M[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            diag.extend([0] * (min(m, n) - t))
            break
        while True:
            i, j = pivot
            M[t], M[i] = M[i], M[t]
            for row in M:
                row[t], row[j] = row[j], row[t]
            p = M[t][t]
            done = True
            for i in range(t + 1, m):
                q = M[i][t] // p
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                if M[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = M[t][j] // p
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                if M[t][j]:
                    done = False
            if done:
                # divisibility: fold any entry not divisible by the pivot into row t
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                M[t] = [a + b for a, b in zip(M[t], M[bad[0]])]
                done = False
            pivot = min(
                (
                    (i, j)
                    for i, j in [(r, t) for r in range(t, m)] + [(t, c) for c in range(t, n)]
                    if M[i][j]
                ),
                key=lambda ij: abs(M[ij[0]][ij[1]]),
            )
        diag.append(abs(M[t][t]))
    return tuple(diag)
