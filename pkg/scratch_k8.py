"""Dev scratch: measure K8 (2,1) enumeration cost on one fixed order."""
import sys
import time

sys.setrecursionlimit(10000)

n = 8
edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
m = len(edges)

def build_masks(rank):
    spans = []
    for u, v in edges:
        a, b = rank[u], rank[v]
        spans.append((a, b) if a < b else (b, a))
    cross = [0] * m
    nest = [0] * m
    for i in range(m):
        a1, b1 = spans[i]
        for j in range(i + 1, m):
            a2, b2 = spans[j]
            lo1, hi1, lo2, hi2 = (a1, b1, a2, b2) if a1 < a2 else (a2, b2, a1, b1)
            if lo1 < lo2 < hi1 < hi2:
                cross[i] |= 1 << j
                cross[j] |= 1 << i
            elif lo1 < lo2 and hi2 < hi1:
                nest[i] |= 1 << j
                nest[j] |= 1 << i
    return spans, cross, nest

rank = list(range(8))
spans, cross, nest = build_masks(rank)
order_idx = sorted(range(m), key=lambda i: (spans[i][0], -spans[i][1]))

count = 0
nodes = 0
layouts = []

def rec(pos, s1, s2, q, s2_used):
    global count, nodes
    nodes += 1
    if pos == m:
        count += 1
        if count <= 3:
            layouts.append((s1, s2, q))
        return
    e = order_idx[pos]
    bit = 1 << e
    cm, nm = cross[e], nest[e]
    if cm & s1 == 0:
        rec(pos + 1, s1 | bit, s2, q, s2_used)
    if (s2_used or s1) and cm & s2 == 0:
        rec(pos + 1, s1, s2 | bit, q, True)
    if nm & q == 0:
        rec(pos + 1, s1, s2, q | bit, s2_used)

t0 = time.time()
rec(0, 0, 0, 0, False)
t1 = time.time()
print(f"valid layouts (stack-symmetry quotiented): {count}")
print(f"nodes: {nodes}, time: {t1-t0:.3f}s")
print(f"projected for 20160 orders: {(t1-t0)*20160/60:.1f} min")

# sample layout readable
if layouts:
    s1, s2, q = layouts[0]
    def names(mask):
        return [edges[i] for i in range(m) if mask >> i & 1]
    print("example: S1:", names(s1))
    print("         S2:", names(s2))
    print("         Q :", names(q))
