"""Reading and writing the text format.

One document can hold an algebra, a pair over it and a module over the
pair; later sections refer to earlier ones by name.  The same document
can be passed to the command line as ``<file>:<name>``.

    python demos/text_documents.py
"""

from liecohom import catalog, relative_betti
from liecohom.textformat import document_for, parse, serialize

TEXT = """\
algebra ga
basis H S
bracket H S = 1 S

pair ga_pair over ga        # k = 0, p = ga

module modular over ga_pair # H acts by trace ad_H = 1
dim 1
rho H 1
"""

doc = parse(TEXT)
pair = doc.get("ga_pair")
print("relative Betti, trivial coefficients:", relative_betti(pair))
print("relative Betti, modular character:   ", relative_betti(pair, doc.get("modular")))
print()
print("canonical form:")
print(serialize(doc))

entry = catalog.get("sl2_so2_pair")
text = serialize(document_for(entry.name, entry.payload, entry.elements))
print("catalog entry sl2_so2_pair:")
print(text)
assert parse(text).get("sl2_so2_pair") == entry.payload
