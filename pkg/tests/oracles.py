"""Brute-force reference implementations, written against frozensets and
kept independent of the package's bitset and kernel code paths."""

from itertools import chain, combinations, permutations


def powerset(ground):
    ground = sorted(ground)
    return [frozenset(c) for c in chain.from_iterable(combinations(ground, r) for r in range(len(ground) + 1))]


def all_families(n):
    """Every collection of subsets of {0..n-1}, as frozensets of frozensets."""
    cube = powerset(range(n))
    for bits in range(1 << len(cube)):
        yield frozenset(s for i, s in enumerate(cube) if (bits >> i) & 1)


def is_ideal(fam, ground):
    ground = frozenset(ground)
    if frozenset() not in fam or ground not in fam:
        return False
    for b in fam:
        if b == ground:
            continue
        for a in powerset(b):
            if a not in fam:
                return False
    return True


def is_downward_closed(fam):
    return all(a in fam for b in fam for a in powerset(b))


def is_intersection_closed(fam):
    return all((a & b) in fam for a in fam for b in fam)


def degree(fam, v):
    return sum(1 for h in fam if v in h)


def nds(fam, ground):
    return 2 * sum(degree(fam, v) for v in ground) - len(ground) * len(fam)


def has_rare(fam, ground):
    return any(2 * degree(fam, v) <= len(fam) for v in ground)


def canonical_key(fam, n):
    """Minimum over relabellings of the sorted tuple of sorted edge tuples."""
    best = None
    for perm in permutations(range(n)):
        img = tuple(sorted(tuple(sorted(perm[v] for v in h)) for h in fam))
        if best is None or img < best:
            best = img
    return best


def to_frozensets(F):
    return frozenset(frozenset(v for v in range(e.bit_length()) if (e >> v) & 1) for e in F.edges)
