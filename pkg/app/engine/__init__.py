from .roots import CartanMatrix, Root, cartan_of, group_order, longest_length, matrix_order, positive_roots
from .quotient import (
    DOWN,
    UP,
    OrbitElement,
    QuotientTable,
    apply_word,
    enumerate_quotient,
    generator_elements,
    length_histogram,
    quotient_length,
    reflection_images,
    seed_weight,
)
