"""
Counting small quandles
=======================

Enumerate labelled quandle tables and reduce them to isomorphism classes.
"""

from ilokit import EnumerationRequest, StructureClass, census, enumerate_models, iso_classes

# labelled and unlabelled counts for orders 1..4
for n in range(1, 5):
    print(census(EnumerationRequest(n, StructureClass.Quandle)))

# the three quandles of order 3, with the size of each class
models = list(enumerate_models(EnumerationRequest(3, StructureClass.Quandle)))
for rep, size in iso_classes(models):
    print(size, rep.d.tolist())
