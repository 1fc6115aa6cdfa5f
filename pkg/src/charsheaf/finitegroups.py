"""Small finite groups with a full multiplication table.

Elements are stored once and addressed by index; ``mul[i][j]`` is the index
of ``elements[i] * elements[j]``.  Intended for groups of at most a few
thousand elements (brute-force checks only).
"""

from collections import deque
from itertools import permutations


class FiniteGroup:

    def __init__(self, elements, mul_fn, name="", labels=None):
        self.name = name
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        self.mul = [[self.index[mul_fn(a, b)] for b in self.elements] for a in self.elements]
        self.identity = next(i for i in range(n) if all(self.mul[i][j] == j for j in range(n)))
        self.inv = [0] * n
        for i in range(n):
            for j in range(n):
                if self.mul[i][j] == self.identity:
                    self.inv[i] = j
                    break
        self.labels = labels or [str(e) for e in self.elements]

    @classmethod
    def generate(cls, gens, mul_fn, name="", label_fn=None, bound=5000):
        seen = {}
        queue = deque()
        for g in gens:
            if g not in seen:
                seen[g] = True
                queue.append(g)
        while queue:
            x = queue.popleft()
            for g in gens:
                y = mul_fn(x, g)
                if y not in seen:
                    seen[y] = True
                    if len(seen) > bound:
                        raise ValueError("group closure exceeded %d elements" % bound)
                    queue.append(y)
        elements = sorted(seen, key=_sort_key)
        labels = [label_fn(e) for e in elements] if label_fn else None
        return cls(elements, mul_fn, name, labels)

    def __len__(self):
        return len(self.elements)

    @property
    def order(self):
        return len(self.elements)

    def m(self, *idx):
        out = self.identity
        for i in idx:
            out = self.mul[out][i]
        return out

    def conj(self, g, x):
        """g x g^-1"""
        return self.mul[self.mul[g][x]][self.inv[g]]

    def element_order(self, x):
        k, y = 1, x
        while y != self.identity:
            y = self.mul[y][x]
            k += 1
        return k

    def conjugacy_classes(self):
        return self.twisted_classes(None)

    def twisted_classes(self, auto):
        """Orbits of x -> g^-1 x auto(g); ordinary classes when ``auto`` is None."""
        n = len(self)
        seen = [False] * n
        classes = []
        for x in range(n):
            if seen[x]:
                continue
            orbit = set()
            for g in range(n):
                ag = g if auto is None else auto[g]
                orbit.add(self.mul[self.mul[self.inv[g]][x]][ag])
            for y in orbit:
                seen[y] = True
            classes.append(sorted(orbit))
        return classes

    def centralizer(self, x):
        return [g for g in range(len(self)) if self.mul[g][x] == self.mul[x][g]]

    def is_automorphism(self, perm):
        n = len(self)
        if sorted(perm) != list(range(n)):
            return False
        return all(perm[self.mul[i][j]] == self.mul[perm[i]][perm[j]]
                   for i in range(n) for j in range(n))

    def fixed_points(self, perm):
        return [i for i in range(len(self)) if perm[i] == i]

    def generated_closure(self, gen_idx):
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g in gen_idx:
                y = self.mul[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def hom_from_generators(self, gen_idx, images, target=None):
        """Extend gen_idx -> images to a homomorphism, or return None if inconsistent."""
        target = target or self
        image = {self.identity: target.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g, h in zip(gen_idx, images):
                y = self.mul[x][g]
                v = target.mul[image[x]][h]
                if y in image:
                    if image[y] != v:
                        return None
                else:
                    image[y] = v
                    queue.append(y)
        if len(image) != len(self):
            return None
        return [image[i] for i in range(len(self))]


def _sort_key(e):
    return repr(e)


# ------------------------------------------------------------ constructors

def perm_mul(a, b):
    """(a*b)(i) = a(b(i)), permutations as image tuples."""
    return tuple(a[i] for i in b)


def cycle_label(p):
    seen, cycles = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(j + 1)
            j = p[j]
        cycles.append("(" + "".join(map(str, c)) + ")")
    return "".join(cycles) or "1"


def cyclic(n):
    return FiniteGroup(range(n), lambda a, b: (a + b) % n, "Z%d" % n,
                       ["1" if k == 0 else ("a" if k == 1 else "a^%d" % k) for k in range(n)])


def symmetric(n):
    els = sorted(permutations(range(n)))
    return FiniteGroup(els, perm_mul, "S%d" % n, [cycle_label(p) for p in els])


def alternating(n):
    def even(p):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        return inv % 2 == 0
    els = sorted(p for p in permutations(range(n)) if even(p))
    return FiniteGroup(els, perm_mul, "A%d" % n, [cycle_label(p) for p in els])


def dihedral8():
    """D8 as pairs (k, f) standing for r^k s^f with s r s = r^-1."""
    def mul(x, y):
        k1, f1 = x
        k2, f2 = y
        return ((k1 + (-k2 if f1 else k2)) % 4, (f1 + f2) % 2)
    els = [(k, f) for f in range(2) for k in range(4)]

    def label(e):
        k, f = e
        r = "" if k == 0 else ("r" if k == 1 else "r^%d" % k)
        if f:
            return r + "s" if r else "s"
        return r or "1"
    return FiniteGroup(els, mul, "D8", [label(e) for e in els])


def quaternion8():
    """Q8 as pairs (sign, unit) with unit in 1, i, j, k."""
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def mul(x, y):
        s, u = table[(x[1], y[1])]
        return (x[0] * y[0] * s, u)
    els = [(s, u) for s in (1, -1) for u in ("1", "i", "j", "k")]
    return FiniteGroup(els, mul, "Q8", [("" if s == 1 else "-") + u for s, u in els])


def trivial_group():
    return FiniteGroup([()], lambda a, b: (), "1", ["1"])


def automorphism_from_map(group, fn):
    """Index permutation of an automorphism given on element values."""
    perm = [group.index[fn(e)] for e in group.elements]
    if not group.is_automorphism(perm):
        raise ValueError("map is not an automorphism of %s" % group.name)
    return perm


def inner_automorphism(group, g):
    return [group.conj(g, x) for x in range(len(group))]


def identity_automorphism(group):
    return list(range(len(group)))
