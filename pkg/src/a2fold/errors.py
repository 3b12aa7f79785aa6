class VerificationError(RuntimeError):
    """A computed quantity failed one of the hard numeric certifications."""
