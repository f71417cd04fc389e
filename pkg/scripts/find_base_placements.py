"""Search small integer coordinates for each catalogue base so that the
half-turn-symmetric l-infinity placement is character-0 isostatic according
to both the colouring oracle and the rank oracle.  The first (smallest
coordinate box, then lexicographically smallest) hit per base is printed for
freezing into gainrig.placement.BASE_PLACEMENTS."""

from fractions import Fraction as F
from itertools import product

from gainrig.catalog import BASE_CATALOG
from gainrig.colouring import geometric_verdict
from gainrig.norms import LINF
from gainrig.rigidity import Framework, analyse, well_positioned


def search(g, radius):
    coords = [c for c in range(-radius, radius + 1)]
    for pts in product(product(coords, coords), repeat=g.n):
        if any(p == (0, 0) for p in pts):
            continue
        pos = tuple((F(x), F(y)) for x, y in pts)
        try:
            fw = Framework(g, pos, LINF, 2)
        except Exception:
            continue
        if not well_positioned(fw):
            continue
        if not geometric_verdict(fw).chi0_isostatic:
            continue
        if not analyse(fw, 0).isostatic:
            continue
        return pts
    return None


def main():
    for bid, g in BASE_CATALOG.items():
        for radius in (2, 3, 4, 5):
            hit = search(g, radius)
            if hit is not None:
                print(f'"{bid}": {hit},')
                break
        else:
            print(f"{bid}: NOT FOUND")


if __name__ == "__main__":
    main()
