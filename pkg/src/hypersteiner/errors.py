"""Exception types shared across solvers."""


class SolverRefusal(RuntimeError):
    """A solver declined to run because a resource guard was exceeded or a
    randomized run ended in an unusable state.

    Callers may catch this and fall back to an approximation algorithm.
    """
