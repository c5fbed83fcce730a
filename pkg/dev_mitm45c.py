"""MITM with BFS dedup on rectangular transfer matrices (deeper halves)."""
import sys, time
from tvskein.skein import SkeinEngine, matchings
from tvskein.diagram import SliceWord
from tvskein.laurent import LaurentPoly, LaurentFrac
from tvskein.rings import ZA

Q11 = LaurentPoly.parse("-1 - A^-4"); Q12 = LaurentPoly.parse("-A^-2 + A^6")
Q21 = LaurentPoly.parse("A^-10 - A^-6 + 3*A^-2 + A^2 - A^6 + 2*A^10 - A^14")
Q22 = LaurentPoly.parse("A^-12 - A^-8 + 2 - 2*A^4 + A^12 - A^16")
BASE = ((Q11,Q12),(Q21,Q22))

def variants(m):
    out, seen = [], set()
    for t in (m, ((m[0][0], m[1][0]), (m[0][1], m[1][1]))):
        for s in (t, ((t[1][1], t[1][0]), (t[0][1], t[0][0]))):
            for u in (s, tuple(tuple(x.bar() for x in row) for row in s)):
                key = tuple(tuple(sorted(x.terms.items())) for row in u for x in row)
                if key not in seen:
                    seen.add(key); out.append(u)
    return out

TARGETS = variants(BASE)
eng = SkeinEngine(ZA)
ms2 = matchings(2)

def state_key(rows):
    out = []
    for st in rows:
        out.append(tuple(sorted((m, tuple(sorted(c.terms.items())))
                                for m, c in st.items())))
    return tuple(out)

def apply_tok(rows, tok):
    kind, pos = tok
    p = pos - 1
    if kind == "cup":
        return [eng.cup(st, p) for st in rows]
    if kind == "cap":
        return [eng.cap(st, p) for st in rows]
    return [eng.cross(st, p, kind == "cross+") for st in rows]

def half_matrices(max6, max4):
    """BFS with dedup: all [cup X cap Y] half transfer matrices."""
    idx = {m: k for k, m in enumerate(ms2)}
    halves = {}
    for b in range(1, 6):
        start = [eng.cup({ms2[i]: ZA.one}, b - 1) for i in (0, 1)]
        level = {state_key(start): (start, [("cup", b)])}
        seen = set(level)
        for depth in range(max6 + 1):
            for key, (rows, toks) in list(level.items()):
                # cap now, then width-4 tail
                for a in range(1, 6):
                    rows2 = [eng.cap(st, a - 1) for st in rows]
                    tail_level = {state_key(rows2): (rows2, toks + [("cap", a)])}
                    tseen = set(tail_level)
                    for d2 in range(max4 + 1):
                        for k2, (r2, t2) in list(tail_level.items()):
                            mat = []
                            ok = True
                            for st in r2:
                                row = [LaurentPoly(), LaurentPoly()]
                                for m, c in st.items():
                                    if m not in idx:
                                        ok = False
                                        break
                                    row[idx[m]] = c
                                if not ok:
                                    break
                                mat.append(tuple(row))
                            if ok:
                                mk = tuple(tuple(sorted(x.terms.items()))
                                           for row in mat for x in row)
                                if mk not in halves:
                                    halves[mk] = t2
                        if d2 == max4:
                            break
                        nxt = {}
                        for k2, (r2, t2) in tail_level.items():
                            for tok in [("cross+", i) for i in (1, 2, 3)] + \
                                       [("cross-", i) for i in (1, 2, 3)]:
                                r3 = apply_tok(r2, tok)
                                k3 = state_key(r3)
                                if k3 in tseen:
                                    continue
                                tseen.add(k3)
                                nxt[k3] = (r3, t2 + [tok])
                        tail_level = nxt
            if depth == max6:
                break
            nxt = {}
            for key, (rows, toks) in level.items():
                for tok in [("cross+", i) for i in range(1, 6)] + \
                           [("cross-", i) for i in range(1, 6)]:
                    r2 = apply_tok(rows, tok)
                    k2 = state_key(r2)
                    if k2 in seen:
                        continue
                    seen.add(k2)
                    nxt[k2] = (r2, toks + [tok])
            level = nxt
    return halves

def main(max6, max4):
    t0 = time.time()
    halves = half_matrices(max6, max4)
    print(f"{len(halves)} distinct half matrices, {time.time()-t0:.0f}s", flush=True)

    def unkey(k):
        return [[LaurentPoly(dict(k[0])), LaurentPoly(dict(k[1]))],
                [LaurentPoly(dict(k[2])), LaurentPoly(dict(k[3]))]]

    def inv2(a):
        det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
        if det.is_zero():
            return None
        dinv = LaurentFrac(1, det)
        return [[LaurentFrac(a[1][1]) * dinv, LaurentFrac(-a[0][1]) * dinv],
                [LaurentFrac(-a[1][0]) * dinv, LaurentFrac(a[0][0]) * dinv]]

    n = 0
    for key1, toks1 in halves.items():
        ai = inv2(unkey(key1))
        if ai is None:
            continue
        n += 1
        if n % 3000 == 0:
            print(f"{n} joined, {time.time()-t0:.0f}s", flush=True)
        for t in TARGETS:
            b = [[ai[i][0] * LaurentFrac(t[0][j]) + ai[i][1] * LaurentFrac(t[1][j])
                  for j in range(2)] for i in range(2)]
            try:
                bm = [[b[i][j].as_laurent() for j in range(2)] for i in range(2)]
            except Exception:
                continue
            mk = tuple(tuple(sorted(x.terms.items())) for row in bm for x in row)
            if mk in halves:
                word = SliceWord(4, tuple(toks1 + halves[mk]))
                print("HIT:", str(word), flush=True)
                with open("/root/pkg/found45.txt", "w") as f:
                    f.write(str(word) + "\n")
                return
    print(f"exhausted {n}, {time.time()-t0:.0f}s", flush=True)

main(int(sys.argv[1]) if len(sys.argv) > 1 else 4,
     int(sys.argv[2]) if len(sys.argv) > 2 else 3)
