# --------------------------------------------------------------------
# PowerSums :: Modules :: Exceptions
# --------------------------------------------------------------------

class PowerSumException(Exception):
    """
        Distinguishes runtime logical errors (such as a route producing a
        non-integral power sum) from programmatic errors (such as passing
        a negative order to a function that documents k >= 1).
        
        PowerSumExceptions should be caught by the program and displayed
        in the most user friendly way possible.
    """
    pass


class InconsistencyError(PowerSumException):
    """
        Raised when an exact computation yields a value that cannot be
        right, e.g. a power sum with a denominator.
        Attributes:
            what        Which quantity was being computed.
            value       The offending value.
    """
    def __init__(self, what, value):
        self.what, self.value = what, value
    
    def __str__(self):
        return "Internal inconsistency: {} evaluated to {}, expected an integer.".format(
            self.what, self.value
        )


class SeriesError(PowerSumException):
    pass


class NonRemovableSingularityError(SeriesError):
    """ The numerator vanishes to a lower order than the denominator. """
    def __init__(self, numValuation, denValuation):
        self.numValuation, self.denValuation = numValuation, denValuation
    
    def __str__(self):
        return (
            "Series division has a pole: numerator valuation {} is below "
            "denominator valuation {}.".format(self.numValuation, self.denValuation)
        )


class SeriesZeroDivisionError(SeriesError, ZeroDivisionError):
    """ The denominator is zero up to its truncation order. """
    def __init__(self, order):
        self.order = order
    
    def __str__(self):
        return "Series division by a series that is zero through x^{}.".format(self.order)


class SingularSystemError(PowerSumException):
    """ A fitted linear system turned out to be singular. """
    def __init__(self, label, size):
        self.label, self.size = label, size
    
    def __str__(self):
        return "The {}x{} system for {} is singular.".format(self.size, self.size, self.label)


class VerificationError(PowerSumException):
    """
        Raised when a cross-check finds routes that disagree.
        Attributes:
            mismatches      list of Mismatch rows (method, k, n, expected, got)
    """
    def __init__(self, mismatches):
        self.mismatches = list(mismatches)
    
    def __str__(self):
        lines = ["{} mismatch(es):".format(len(self.mismatches))]
        for row in self.mismatches:
            lines.append("  {}".format(row))
        return "\n".join(lines)
