"""Regenerate the sample inputs under data/ (run from the repository root)."""
from pathlib import Path

from strictify.f2c import dump_f2c
from strictify.fin2cat import build_suspended_poset_monoid, lo_hi_chain, sample_pair, terminal
from strictify.laxnest import dlaw_assignment, dlaw_enum, dlaw_object, identity_arrow, identity_twocell
from strictify.textio import dump_assignment, dump_laxnest_arrow, dump_laxnest_object, dump_laxnest_twocell

OUT = Path("data")

WORKED_CELLS = """\
# 2-cell from cdccd to cdcc in chain_4 [x] chain_3
cell f = (1;1) word=cdccd cpath=[lo_1_2,lo_2_3,lo_3_4] dpath=[lo_1_2,lo_2_3]
cell g = (1;1) word=cdcc cpath=[hi_1_2,hi_2_2,hi_2_4] dpath=[hi_1_3]
two a : f => g xi=[0,1,1,3] rho=[0,2] alpha=[lo_1_2=>hi_1_2,id_2=>hi_2_2,lo_2_4=>hi_2_4] beta=[lo_1_3=>hi_1_3]
"""

UNIT_CELLS = """\
# cells of 1 [x] 1
cell f = (*;*) word=cd cpath=[id1_*] dpath=[id1_*]
cell g = (*;*) word=dc cpath=[id1_*] dpath=[id1_*]
cell h = (*;*) word=- cpath=[] dpath=[]
two s : f => g xi=[0,1] rho=[0,1] alpha=[id2_id1_*] beta=[id2_id1_*]
two u : h => f xi=[0,0] rho=[0,0] alpha=[id2_id1_*] beta=[id2_id1_*]
"""


def main() -> None:
    OUT.mkdir(exist_ok=True)
    C, D = sample_pair()
    cats = {"terminal": terminal(), "sample_C": C, "sample_D": D, "chain_4": lo_hi_chain(4), "chain_3": lo_hi_chain(3)}
    cats.update({f"E{k}": build_suspended_poset_monoid(k) for k in range(4)})
    for name, E in cats.items():
        (OUT / f"{name}.f2c").write_text(dump_f2c(E), encoding="utf-8")
    (OUT / "worked.cells").write_text(WORKED_CELLS, encoding="utf-8")
    (OUT / "unit.cells").write_text(UNIT_CELLS, encoding="utf-8")
    E3 = cats["E3"]
    law = next(l for l in dlaw_enum(E3) if (l.t, l.s) == ("3", "3"))
    (OUT / "E3_dlaw.assign").write_text(dump_assignment(dlaw_assignment(E3, law)), encoding="utf-8")
    B = dlaw_object(E3, law)
    b = identity_arrow(B)
    (OUT / "E3_dlaw.object").write_text(dump_laxnest_object(B), encoding="utf-8")
    (OUT / "E3_dlaw_id.arrow").write_text(dump_laxnest_arrow(b), encoding="utf-8")
    (OUT / "E3_dlaw_id.twocell").write_text(dump_laxnest_twocell(identity_twocell(b, E3)), encoding="utf-8")


if __name__ == "__main__":
    main()
