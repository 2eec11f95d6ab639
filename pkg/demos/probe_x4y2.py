"""Count the Groebner cell of (x^4, y^2) over small prime fields and compare
it with the image of the small-degree matrix family."""

import json
import sys

from hilburch import Staircase, conjecture_probe

E = Staircase.from_m((0, 2, 2, 2, 2))
for p in (int(a) for a in sys.argv[1:] or ["2", "3"]):
    rep = conjecture_probe(E, p)
    print(json.dumps({k: rep[k] for k in ("prime", "d_template", "cell_count",
                                          "image_count", "injective", "pass")}))
