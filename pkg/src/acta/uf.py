"""Small union-find over dense integer indices."""


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def assignment(self) -> tuple[int, ...]:
        """Class id per index, numbered by first occurrence."""
        seen: dict[int, int] = {}
        return tuple(seen.setdefault(self.find(i), len(seen)) for i in range(len(self.parent)))
