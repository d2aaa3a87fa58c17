"""The operations the checker is allowed to call.

Obligations reach the kernel only through a :class:`Kernel` instance, so a
test can subclass it, break one operation, and watch the matching
obligation fail.
"""

from .. import naturals, objects, ordinals


class Kernel:
    mk_individual = staticmethod(objects.mk_individual)
    mk_set = staticmethod(objects.mk_set)
    member = staticmethod(objects.member)
    equal = staticmethod(objects.equal)
    extensionally_equal = staticmethod(objects.extensionally_equal)
    subset = staticmethod(objects.subset)
    pair = staticmethod(objects.pair)
    union = staticmethod(objects.union)
    cup = staticmethod(objects.cup)
    is_transitive = staticmethod(objects.is_transitive)
    specification = staticmethod(objects.specification)
    regularity_witness = staticmethod(objects.regularity_witness)

    first_number = staticmethod(naturals.first_number)
    is_number = staticmethod(naturals.is_number)
    succ = staticmethod(naturals.succ)
    pred = staticmethod(naturals.pred)
    lt = staticmethod(naturals.lt)
    leq = staticmethod(naturals.leq)
    compare = staticmethod(naturals.compare)
    smallest_number = staticmethod(naturals.smallest_number)
    greatest_number = staticmethod(naturals.greatest_number)
    induction_check = staticmethod(naturals.induction_check)
    add = staticmethod(naturals.add)
    mul = staticmethod(naturals.mul)
    to_int = staticmethod(naturals.to_int)
    from_int = staticmethod(naturals.from_int)

    omega = staticmethod(ordinals.omega)
    succ_ord = staticmethod(ordinals.succ_ord)
    add_nat_ord = staticmethod(ordinals.add_nat_ord)
    add_ord_nat = staticmethod(ordinals.add_ord_nat)
    is_ordinal_first_omega = staticmethod(ordinals.is_ordinal_first_omega)
    first_number_level = staticmethod(ordinals.first_number_level)


DEFAULT_KERNEL = Kernel()
