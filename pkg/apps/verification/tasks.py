import logging
from typing import Any, Dict

from celery import shared_task

from apps.core.exceptions import MahoniaException
from apps.verification.checks import CheckRegistry

logger = logging.getLogger(__name__)


@shared_task
def run_check_partition(check_name: str, n: int, start: int, stop: int, context: Dict[str, Any] = None) -> Dict[str, Any]:
    """
    Celery task running one index range of an element check.

    The outcome is returned as a plain dict so it survives the JSON
    serializer; the caller merges partitions by least counterexample index.
    """
    check = CheckRegistry.create_instance(check_name, context)
    if check is None:
        raise MahoniaException(f"unknown check '{check_name}'")

    logger.debug(f"Running {check_name} n={n} on [{start}, {stop})")
    outcome = check.run_range(n, start, stop)
    if not outcome.passed:
        logger.info(f"{check_name} n={n} failed at index {outcome.index}")
    return outcome.to_dict()
