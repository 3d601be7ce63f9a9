"""Independent brute-force oracles used by the test suite.

These deliberately avoid the package's enumeration, echelon, and rewriting
code paths: words are enumerated by local recursion in application order
(first applied arrow first) and ranks come from locally written elimination.
"""

from __future__ import annotations

from fractions import Fraction


def dense_rank(rows: list[list[Fraction]]) -> int:
    """Plain Gaussian elimination over dense Fraction rows."""
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        pivot = None
        for i, r in enumerate(rows):
            if r[col]:
                pivot = i
                break
        if pivot is None:
            col += 1
            continue
        prow = rows.pop(pivot)
        inv = Fraction(1) / prow[col]
        prow = [c * inv for c in prow]
        rank += 1
        nxt = []
        for r in rows:
            if r[col]:
                f = r[col]
                r = [a - f * b for a, b in zip(r, prow)]
            if any(r):
                nxt.append(r)
        rows = nxt
        col += 1
    return rank


def sparse_rank(rows: list[dict]) -> int:
    """Forward elimination on sparse dict rows, pivoting on the smallest key."""
    pivots: dict = {}
    rank = 0
    for row in rows:
        vec = dict(row)
        while vec:
            lead = min(vec)
            if lead not in pivots:
                inv = Fraction(1) / vec[lead]
                pivots[lead] = {k: c * inv for k, c in vec.items()}
                rank += 1
                break
            prow = pivots[lead]
            f = vec[lead]
            for k, c in prow.items():
                s = vec.get(k, Fraction(0)) - f * c
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
    return rank


def walks(adj: dict, start: int, length: int) -> list[tuple]:
    """All application-order arrow-index words of the given length from start."""
    if length == 0:
        return [()]
    out = []
    for ident, nxt in adj.get(start, []):
        for rest in walks(adj, nxt, length - 1):
            out.append((ident,) + rest)
    return out


def quiver_adjacency(arrows: list[tuple]) -> dict:
    """arrows: list of (ident, source, target) -> adjacency by source."""
    adj: dict = {}
    for ident, src, tgt in arrows:
        adj.setdefault(src, []).append((ident, tgt))
    return adj


def word_end(arrows_by_ident: dict, start: int, word: tuple) -> int:
    at = start
    for ident in word:
        src, tgt = arrows_by_ident[ident]
        assert src == at
        at = tgt
    return at


def quotient_total_dim(vertices, arrows, relations, max_length: int) -> int:
    """dim of (paths up to L) / span{u r v} for length-homogeneous relations.

    arrows: list of (ident, source, target).  relations: list of
    (start_vertex, [(word, coeff), ...]) with words in application order, all
    of one length per relation, sharing their endpoints.
    """
    adj = quiver_adjacency(arrows)
    by_ident = {ident: (src, tgt) for ident, src, tgt in arrows}
    total = 0
    for length in range(max_length + 1):
        block: list[tuple[int, tuple]] = []
        for v in vertices:
            for w in walks(adj, v, length):
                block.append((v, w))
        if not block:
            continue
        index = {key: i for i, key in enumerate(block)}
        rows = []
        for start, terms in relations:
            rel_len = len(terms[0][0])
            end = word_end(by_ident, start, terms[0][0])
            for pre_len in range(0, length - rel_len + 1):
                suf_len = length - rel_len - pre_len
                for v in vertices:
                    for pre in walks(adj, v, pre_len):
                        if word_end(by_ident, v, pre) != start:
                            continue
                        for suf in walks(adj, end, suf_len):
                            row = [Fraction(0)] * len(block)
                            for word, coeff in terms:
                                key = (v, pre + word + suf)
                                row[index[key]] += coeff
                            rows.append(row)
        total += len(block) - (dense_rank(rows) if rows else 0)
    return total


def invariant_monomial_count(n: int, a: tuple, degree: int) -> int:
    """Monomials x^i y^j z^k of the given degree with a.(i,j,k) = 0 mod n."""
    count = 0
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            k = degree - i - j
            if (a[0] * i + a[1] * j + a[2] * k) % n == 0:
                count += 1
    return count


def leavitt_graded_dims(vertices, arrows, degree: int, word_length: int) -> int:
    """Word-span dimension in one degree, modulo truncated Leavitt relations.

    arrows: list of (ident, source, target, is_star, partner_ident).  The
    relations are rebuilt here from scratch: star-unstar contractions, the
    vertex sums, and cross terms; generators are u r v with every term of
    length <= word_length.
    """
    adj = quiver_adjacency([(i, s, t) for i, s, t, _, _ in arrows])
    by_ident = {i: (s, t) for i, s, t, _, _ in arrows}
    is_star = {i: st for i, s, t, st, _ in arrows}
    partner = {i: p for i, s, t, _, p in arrows}
    deg_of = {i: (1 if is_star[i] else -1) for i in by_ident}

    # words below are in application order: first applied letter first
    relations: list[tuple[int, list[tuple[tuple, Fraction]]]] = []
    for v in vertices:
        incoming = [i for i in by_ident
                    if not is_star[i] and by_ident[i][1] == v]
        if incoming:
            # sum alpha' alpha'* = e_v: alpha'* applied first, starting at v
            terms = [((partner[i], i), Fraction(1)) for i in incoming]
            terms.append(((), Fraction(-1)))
            relations.append((v, terms))
    for i in by_ident:
        if is_star[i]:
            continue
        # alpha'* alpha' = e_{s(alpha')}: alpha' applied first
        src = by_ident[i][0]
        relations.append((src, [((i, partner[i]), Fraction(1)), ((), Fraction(-1))]))
    for i in by_ident:
        for j in by_ident:
            if is_star[i] or is_star[j] or i == j:
                continue
            if by_ident[i][1] != by_ident[j][1]:
                continue
            # alpha'* beta' = 0: beta' applied first, then alpha'*
            relations.append((by_ident[j][0], [((j, partner[i]), Fraction(1))]))

    block: list[tuple[int, tuple]] = []
    for l in range(word_length + 1):
        for v in vertices:
            for w in walks(adj, v, l):
                if sum(deg_of[i] for i in w) == degree:
                    block.append((v, w))
    index = {key: i for i, key in enumerate(block)}

    rows: list[dict] = []
    for start, terms in relations:
        rel_deg = sum(deg_of[i] for i in terms[0][0])
        top = max(len(w) for w, _ in terms)
        end = word_end(by_ident, start, terms[0][0])
        for pre_len in range(0, word_length - top + 1):
            for v in vertices:
                for pre in walks(adj, v, pre_len):
                    if word_end(by_ident, v, pre) != start:
                        continue
                    pre_deg = sum(deg_of[i] for i in pre)
                    for suf_len in range(0, word_length - top - pre_len + 1):
                        for suf in walks(adj, end, suf_len):
                            if pre_deg + rel_deg + sum(deg_of[i] for i in suf) != degree:
                                continue
                            row: dict = {}
                            for word, coeff in terms:
                                key = index[(v, pre + word + suf)]
                                row[key] = row.get(key, Fraction(0)) + coeff
                            rows.append({k: c for k, c in row.items() if c})
    return len(block) - sparse_rank(rows)
