"""Combinatorics of alternating snakes: classification, prime descriptor
sets, canonical factorization, exchange relations, monoid isomorphisms, and
the height-function translation."""

from .core import (Interval, MonoidElement, Snake, height_of, is_trivial,
                   normalize_generator, parse_monoid_element, parse_snake,
                   product, quotient)
from .errors import (FalsifiedInvariantError, NotAlternatingError, ParseError,
                     PreconditionError, SnakeAlgError)
from .explorer import (CorpusSpec, enumerate_snakes, oracle_factorizations,
                       random_snake)
from .factorizer import (Factorization, Profile, canonical_order,
                         compatible_product, extract_profile, factor)
from .grothendieck import (ExchangeTriple, IrredClass, RingElement,
                           exchange_triple, irred_class, multiply_classes)
from .heightmap import (HeightProfile, cluster_export, fr_xi, height_profile,
                        interval_set_xi, n_of, p_sequence, pr_bijection,
                        pr_xi, snake_of_xi, window_image)
from .isomorph import SnakeIso, build_iso, check_iso_conditions, transport_check
from .primesets import (PrimeDescriptor, WindowSnake, closure_check,
                        descriptor_index, fr_set, generator_intervals,
                        interval_set, lookup_descriptor, pr_set,
                        submonoid_member, tilde_interval_set, window_admissible,
                        window_snake)
from .snakes import (SnakeClassification, check_enumeration, classify,
                     epsilon_sequence, is_connected, is_prime, is_stable,
                     prime_factor_decomposition, require_prime)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
