"""Print the worked examples: hexagon, the three Van Kampen decompositions, the square."""

from __future__ import annotations

from fgtool import catalog
from fgtool.combinatorics import complete_quiver, order_quiver
from fgtool.formats import serialize_presentation, serialize_structure
from fgtool.groups import describe, format_word, invariant_suite, simplify_presentation
from fgtool.pi1 import quiver_pi1_presentation, van_kampen_assemble, van_kampen_data


def show(title, p):
    print(f"## {title}: {describe(p)}")
    print(serialize_presentation(simplify_presentation(p), invariant_suite(p)))


def main():
    show("hexagon", quiver_pi1_presentation(catalog.hexagon_quiver()))

    q, left, right = catalog.diamond_split()
    show("example 1 (diamond)", van_kampen_assemble(q, left, right))

    ex = catalog.example2()
    show("example 2 direct", quiver_pi1_presentation(ex["Q"]))
    show("example 2 Q1 from Q11, Q12", van_kampen_assemble(ex["Q1"], ex["Q11"], ex["Q12"]))
    show("example 2 Q2 from Q21, Q22", van_kampen_assemble(ex["Q2"], ex["Q21"], ex["Q22"]))
    show("example 2 Q from Q1, Q2", van_kampen_assemble(ex["Q"], ex["Q1"], ex["Q2"]))

    ex3 = catalog.example3()
    data = van_kampen_data(ex3["Q"], ex3["Q1"], ex3["Q2"])
    print("## example 3 amalgamation relators:", [format_word(r) for r in data.amalgamation])
    show("example 3", data.presentation)

    sq = catalog.square_quiver()
    print("## square, completed\n" + serialize_structure(complete_quiver(sq)))
    print("## square, ordered\n" + serialize_structure(order_quiver(sq)))


if __name__ == "__main__":
    main()
