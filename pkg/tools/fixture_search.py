"""Dev-time constraint search for the six-candidate case-study fixture.

Derives per-paper (citations, coauthors) data that reproduces every pinned
integer / 2-decimal cell of the published case-study tables, and reports the
range of beta for which the exponential fractional h column also matches.

The metric evaluations here are deliberately written from scratch (count
based, no shared code with the package) so the search acts as an independent
oracle for the frozen fixture in ``scalecite.casestudy``.

Run:  python tools/fixture_search.py
"""

import itertools
import math

import numpy as np

# Published 2-decimal SBCI cells, settings (alpha, f, g):
# (0.6, sqrt, log1p), (0.8, sqrt, id), (0.8, id, log1p), (0.8, id, id)
SBCI_TABLE = {
    1: (1.37, 5.99, 0.61, 3.93),
    2: (1.50, 8.34, 0.66, 5.15),
    3: (4.73, 2113.70, 4.48, 216.69),
    4: (6.10, 2119.69, 5.09, 220.62),
    5: (6.75, 1580.52, 5.35, 211.79),
    6: (2.22, 50.63, 1.00, 28.93),
}
H_I = {1: 1.78, 2: 1.67, 3: 0.01, 4: 0.02, 5: 0.30, 6: 1.79}
H_EXP = {1: 2, 2: 2, 3: 0, 4: 2, 5: 3, 6: 3}


def h_count(values):
    # largest h with at least h values >= h
    best = 0
    for h in range(1, len(values) + 1):
        if sum(1 for v in values if v >= h) >= h:
            best = h
    return best


def h_core_authors(papers, h):
    ranked = sorted(range(len(papers)), key=lambda i: (-papers[i][0], papers[i][1], i))
    return sum(papers[i][1] for i in ranked[:h])


def h_ind(papers):
    h = h_count([c for c, _ in papers])
    return 0.0 if h == 0 else h * h / h_core_authors(papers, h)


def h_frac(papers):
    return h_count([c / a for c, a in papers])


def h_exp(papers, beta):
    return h_count([c * math.exp(-beta * (a - 1)) for c, a in papers])


def g_idx(papers):
    cs = sorted((c for c, _ in papers), reverse=True)
    best, total = 0, 0
    for k, c in enumerate(cs, 1):
        total += c
        if total >= k * k:
            best = k
    return best


def sbci_cells(papers, tau=26):
    out = []
    for alpha, f, g in ((0.6, math.sqrt, math.log1p), (0.8, math.sqrt, None),
                        (0.8, None, math.log1p), (0.8, None, None)):
        fa = f or (lambda x: x)
        gg = g or (lambda x: x)
        wl = sum(c / fa(a) for c, a in papers if a >= tau)
        ws = sum(c / fa(a) for c, a in papers if a < tau)
        out.append(alpha * gg(wl) + (1 - alpha) * gg(ws))
    return out


def rounds_to(x, target):
    return abs(x - target) < 0.005 - 1e-12


def cells_match(papers, cand):
    return all(rounds_to(v, t) for v, t in zip(sbci_cells(papers), SBCI_TABLE[cand]))


def search_c1():
    """Candidate 1: five small-team papers, 46 citations, h=4, g=5, h_frac=2,
    h-core of 9 authors; citations span exactly 1..20."""
    found = []
    for c4 in (4, 5):
        for c5 in range(1, 5):
            for c2 in range(7, 21):
                c1 = 41 - c4 - c5 - c2
                if not (c2 <= c1 <= 20):
                    continue
                cits = (c1, c2, 5, c4, c5)
                if min(cits) != 1 or max(cits) != 20:
                    continue
                for core in itertools.product(range(1, 7), repeat=4):
                    if sum(core) != 9:
                        continue
                    for a5 in range(1, 26):
                        authors = core + (a5,)
                        papers = list(zip(cits, authors))
                        if h_count(cits) != 4 or g_idx(papers) != 5 or h_frac(papers) != 2:
                            continue
                        if not rounds_to(h_ind(papers), H_I[1]):
                            continue
                        fr = sorted((c / a for c, a in papers), reverse=True)
                        # top two shares must also count toward candidate 4's h_frac of 6
                        if fr[1] < 6:
                            continue
                        if authors[2] > 2:
                            continue
                        if cells_match(papers, 1):
                            found.append(papers)
    return found


def search_c2(c1):
    """Three extra papers (3..20 citations, 23 in total) on top of candidate 1."""
    found = []
    for e in itertools.combinations_with_replacement(range(3, 21), 3):
        if sum(e) != 23:
            continue
        for ea in itertools.product(range(1, 26), repeat=3):
            papers = c1 + list(zip(e, ea))
            if h_count([c for c, _ in papers]) != 5 or g_idx(papers) != 8:
                continue
            if h_frac(papers) != 3 or not rounds_to(h_ind(papers), H_I[2]):
                continue
            if cells_match(papers, 2):
                found.append(papers)
    return found


def search_c6(c1):
    """Two extra small-team papers (300 + 100 citations) on top of candidate 1;
    candidate 5 adds the (16000, 70) blockbuster."""
    found = []
    for a1 in range(1, 26):
        for a2 in range(1, 26):
            c6 = c1 + [(300, a1), (100, a2)]
            c5 = c6 + [(16000, 70)]
            if h_count([c for c, _ in c6]) != 5 or g_idx(c6) != 7 or h_frac(c6) != 4:
                continue
            if h_count([c for c, _ in c5]) != 5 or g_idx(c5) != 8 or h_frac(c5) != 5:
                continue
            if not (rounds_to(h_ind(c6), H_I[6]) and rounds_to(h_ind(c5), H_I[5])):
                continue
            if cells_match(c6, 6) and cells_match(c5, 5):
                found.append((c6, c5))
    return found


def search_c3(c1, limit=20):
    """Five consortium papers 16000/8000/4000/2000/1000, first one shared with
    candidate 5. Scans (a2, a3, a4) and solves a5 from the Σc/a cell."""
    cits = (16000, 8000, 4000, 2000, 1000)
    t_lin = SBCI_TABLE[3][3] / 0.8
    base_lin = 16000 / 70
    grid = np.arange(26, 1501)
    a2, a3 = np.meshgrid(grid, grid, indexing="ij")
    l2 = cits[1] / a2 + cits[2] / a3
    found = []
    for a4 in range(26, 1501):
        rem_lin = t_lin - base_lin - l2 - cits[3] / a4
        with np.errstate(divide="ignore", invalid="ignore"):
            a5 = np.rint(cits[4] / rem_lin)
        ok = (a5 >= 26) & (a5 <= 1500) & (a2 <= a3)
        idx = np.nonzero(ok)
        for i, j in zip(*idx):
            papers = [(16000, 70), (8000, int(a2[i, j])), (4000, int(a3[i, j])),
                      (2000, a4), (1000, int(a5[i, j]))]
            if not cells_match(papers, 3):
                continue
            if h_count([c for c, _ in papers]) != 5 or h_frac(papers) != 4:
                continue
            if not rounds_to(h_ind(papers), H_I[3]):
                continue
            c4 = c1 + papers
            if h_count([c for c, _ in c4]) != 7 or g_idx(c4) != 10 or h_frac(c4) != 6:
                continue
            if not (rounds_to(h_ind(c4), H_I[4]) and cells_match(c4, 4)):
                continue
            found.append(papers)
            if len(found) >= limit:
                return found
    return found


def beta_interval(cands, lo=0.001, hi=2.0, step=0.0005):
    ok = []
    for beta in np.arange(lo, hi, step):
        if all(h_exp(p, beta) == H_EXP[k] for k, p in cands.items()):
            ok.append(round(float(beta), 4))
    return (ok[0], ok[-1]) if ok else None


def main():
    c1s = search_c1()
    print(f"candidate 1 solutions: {len(c1s)}")
    for c1 in c1s:
        c2s = search_c2(c1)
        c6s = search_c6(c1)
        if not c2s or not c6s:
            continue
        print("C1", c1, "| C2 options", len(c2s), "| C6 options", len(c6s))
        c3s = search_c3(c1, limit=5)
        if not c3s:
            continue
        for c2 in c2s[:3]:
            for c6, c5 in c6s[:3]:
                for c3 in c3s[:3]:
                    cands = {1: c1, 2: c2, 3: c3, 4: c1 + c3, 5: c5, 6: c6}
                    print("  C2 extra", c2[5:], "C6 extra", c6[5:], "C3", c3,
                          "beta", beta_interval(cands))
        return


if __name__ == "__main__":
    main()
