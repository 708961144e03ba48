import itertools
import logging
import math
from typing import Callable, List, Tuple

import numpy
from scipy.optimize import minimize_scalar

from OPONoise.errors import FitError, ValidationError

from .FitProblem import LOG_SPACED, FitProblem
from .FitResult import FitResult
from .objective import objective, residuals

logger = logging.getLogger(__name__)

LINE_SEARCH_XATOL = 1e-12


class GridDescent:
    """ Deterministic two-stage least-squares search.

    A coarse grid over the bounds (log-spaced for μ and V₀) picks the starting point,
    which coordinate descent then refines with bounded line searches. Line searches
    move one grid step at most around the current point and only improvements are
    accepted, so the result is never worse than the best grid point.
    """

    def fit(self, problem: FitProblem) -> FitResult:
        """Fit the free parameters of a problem.

        Args:
            problem (FitProblem): Observations, free parameters and fixed model.

        Returns:
            FitResult: Best parameters, residuals and convergence information.
        """
        self._check_problem(problem)
        transforms = [_Transform(name in LOG_SPACED, *problem.bounds[name]) for name in problem.free_params]
        counter = _CountingObjective(problem, transforms)

        best_u, best_value = self._grid_stage(problem, transforms, counter)
        best_u, best_value, converged = self._descent_stage(problem, transforms, counter, best_u, best_value)

        best = [float(transform.to_param(u)) for transform, u in zip(transforms, best_u)]
        return FitResult(
            best_params=dict(zip(problem.free_params, best)),
            residuals=residuals(best, problem),
            objective=best_value,
            converged=converged,
            evaluations=counter.evaluations,
        )

    def grid(self, problem: FitProblem) -> List[Tuple[float, ...]]:
        """ All coarse-grid candidates, in evaluation order. """
        transforms = [_Transform(name in LOG_SPACED, *problem.bounds[name]) for name in problem.free_params]
        axes = [transform.to_param(numpy.linspace(*transform.u_bounds, problem.grid_points)).tolist()
                for transform in transforms]
        return list(itertools.product(*axes))

    def _check_problem(self, problem: FitProblem):
        if len(problem.observations) < len(problem.free_params):
            raise ValidationError(
                f"{len(problem.observations)} observations cannot constrain "
                f"{len(problem.free_params)} free parameters.", "observations")

    def _grid_stage(self, problem: FitProblem, transforms, counter) -> Tuple[numpy.ndarray, float]:
        axes = [numpy.linspace(*transform.u_bounds, problem.grid_points) for transform in transforms]
        best_u, best_value = None, math.inf
        for u in itertools.product(*axes):
            value = counter(numpy.array(u))
            if value < best_value:
                best_u, best_value = numpy.array(u), value
        if best_u is None:
            raise FitError("Every point of the coarse grid is infeasible.")
        logger.debug("Grid of %d points: best objective %.6g at %s.",
                     problem.grid_points ** len(transforms), best_value, best_u)
        return best_u, best_value

    def _descent_stage(self, problem: FitProblem, transforms, counter,
                       best_u: numpy.ndarray, best_value: float) -> Tuple[numpy.ndarray, float, bool]:
        steps = [(transform.u_bounds[1] - transform.u_bounds[0]) / (problem.grid_points - 1)
                 for transform in transforms]
        for iteration in range(problem.max_iterations):
            previous = best_value
            for index, (transform, step) in enumerate(zip(transforms, steps)):
                lo = max(transform.u_bounds[0], best_u[index] - step)
                hi = min(transform.u_bounds[1], best_u[index] + step)
                line = _line(counter, best_u, index)
                result = minimize_scalar(line, bounds=(lo, hi), method="bounded",
                                         options={"xatol": LINE_SEARCH_XATOL})
                if result.fun < best_value:
                    best_u = best_u.copy()
                    best_u[index] = result.x
                    best_value = float(result.fun)
            logger.debug("Iteration %d: objective %.12g.", iteration, best_value)
            if previous - best_value < problem.tolerance:
                return best_u, best_value, True
        return best_u, best_value, False


def fit(problem: FitProblem) -> FitResult:
    return GridDescent().fit(problem)


class _Transform:
    """ Maps a parameter to the coordinate the search works in (log10 for log-spaced ones). """

    def __init__(self, logarithmic: bool, lo: float, hi: float):
        self.logarithmic = logarithmic
        self.lo, self.hi = lo, hi
        self.u_bounds = (math.log10(lo), math.log10(hi)) if logarithmic else (lo, hi)

    def to_param(self, u):
        if self.logarithmic:
            value = 10.0 ** u
        else:
            value = u
        # grid end points must not leave the bounds through rounding
        return numpy.clip(value, self.lo, self.hi)


class _CountingObjective:

    def __init__(self, problem: FitProblem, transforms):
        self._problem = problem
        self._transforms = transforms
        self.evaluations = 0

    def __call__(self, u: numpy.ndarray) -> float:
        self.evaluations += 1
        candidate = [float(transform.to_param(value)) for transform, value in zip(self._transforms, u)]
        return objective(candidate, self._problem)


def _line(counter: Callable, u: numpy.ndarray, index: int) -> Callable[[float], float]:
    def evaluate(value: float) -> float:
        point = u.copy()
        point[index] = value
        return counter(point)
    return evaluate
