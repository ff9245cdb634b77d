"""Exception hierarchy.

Every error raised on bad input derives from :class:`DomainError`; the CLI
maps those to exit code 2 and :class:`CapExceeded` to exit code 3.
"""


class DomainError(ValueError):
    """Input violates an operation's precondition."""

    code = "domain_error"

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class UnknownLetter(DomainError):
    code = "unknown_letter"

    def __init__(self, name):
        super().__init__(f"unknown letter {name!r}")
        self.name = name


class AlphabetMismatch(DomainError):
    code = "alphabet_mismatch"


class IndexOutOfRange(DomainError):
    code = "index_out_of_range"


class OccurrenceOutOfRange(DomainError):
    code = "occurrence_out_of_range"


class NotEquivalent(DomainError):
    code = "not_equivalent"


class NotEquivalentEndpoints(NotEquivalent):
    code = "not_equivalent_endpoints"


class SizeMismatch(DomainError):
    code = "size_mismatch"


class LengthMismatch(DomainError):
    code = "length_mismatch"


class NotAMorphism(DomainError):
    code = "not_a_morphism"

    def __init__(self, index, expected, found):
        super().__init__(
            f"not a morphism: position {index} carries {expected!r} "
            f"but its image carries {found!r}"
        )
        self.index = index
        self.expected = expected
        self.found = found


class NotComposable(DomainError):
    code = "not_composable"


class SortMismatch(DomainError):
    code = "sort_mismatch"


class MalformedElement(DomainError):
    code = "malformed_element"


class MalformedCategory(DomainError):
    code = "malformed_category"


class MalformedCongruence(DomainError):
    code = "malformed_congruence"


class NotACongruence(DomainError):
    code = "not_a_congruence"


class AxiomsNotVerified(DomainError):
    code = "axioms_not_verified"

    def __init__(self, report):
        failed = [c.number for c in report.conditions if not c.passed]
        super().__init__(f"Riguet conditions {failed} fail")
        self.report = report


class CapExceeded(DomainError):
    code = "cap_exceeded"


class TooLarge(CapExceeded):
    code = "too_large"
