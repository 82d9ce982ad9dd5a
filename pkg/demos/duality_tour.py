"""A guided walk from a finite space to its frame of opens and back.

Run with: python3 demos/duality_tour.py
"""

from stonekit import (
    dumps,
    filter_space,
    homeomorphic,
    indiscrete_space,
    is_sober,
    open_set_frame,
    pairing_map,
    sierpinski,
    sobrification,
    spectrum,
    t0_quotient,
)


def main() -> None:
    x = sierpinski()
    print("The Sierpinski space:")
    print(dumps(x, "sierpinski"))
    print()

    lat = open_set_frame(x)
    print(f"Its opens form a lattice with {lat.n} elements: {lat.poset.elements}")

    pts = spectrum(lat)
    print(f"The spectrum of that lattice has {pts.n} points.")
    print(f"Homeomorphic to the space we started from: {homeomorphic(x, pts)}")
    print(f"Already sober, so sobrification does nothing: {is_sober(x)}")
    print()

    blob = indiscrete_space(("x", "y"))
    squashed, _ = t0_quotient(blob)
    print(f"An indiscrete pair is not sober: {is_sober(blob)}")
    print(f"Its T0 quotient has {squashed.n} point(s); the")
    print(f"sobrification agrees: {sobrification(blob)[0].n} point(s).")
    print()

    fx = filter_space(x)
    p = pairing_map(x)
    print(f"The space of open prime filters on the Sierpinski opens has {fx.n}")
    print(f"points, and the spectrum route lands on the same space: the pairing")
    print(f"sends point i to its neighborhood filter, assignment {p.assignment}.")


if __name__ == "__main__":
    main()
