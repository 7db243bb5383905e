"""
Task Registry

This module defines the TaskRegistry class for discovering, registering
and instantiating task types.
"""

import importlib
import inspect
import logging
import pkgutil
from typing import Any, Dict, List, Type

from core.errors import TaskNotFoundError
from core.task_base import TaskBase

logger = logging.getLogger(__name__)


class TaskRegistry:
    """
    Registry for task types.

    The TaskRegistry is responsible for:
    - Discovering task types from the sub-packages of the tasks package
    - Registering custom task types
    - Creating task instances
    - Providing information about available task types
    """

    def __init__(self, discover: bool = True):
        """Initialize the task registry."""
        self.task_types: Dict[str, Type[TaskBase]] = {}  # task_name -> task_class
        self.categories: Dict[str, str] = {}  # task_name -> sub-package
        if discover:
            self._discover_task_types()
        logger.debug(f"Task registry initialized with {len(self.task_types)} task types")

    def register_task_type(self, task_class: Type[TaskBase], category: str = "general") -> None:
        """
        Register a task type under its TASK_NAME.

        Raises:
            ValueError: If task_class doesn't inherit from TaskBase or has no TASK_NAME
        """
        if not (inspect.isclass(task_class) and issubclass(task_class, TaskBase)):
            raise ValueError(f"Task class {task_class!r} must inherit from TaskBase")
        if not task_class.TASK_NAME:
            raise ValueError(f"Task class {task_class.__name__} does not declare a TASK_NAME")
        self.task_types[task_class.TASK_NAME] = task_class
        self.categories[task_class.TASK_NAME] = category
        logger.debug(f"Registered task type: {task_class.TASK_NAME} ({category})")

    def create_task(self, task_name: str) -> TaskBase:
        """
        Create a task instance.

        Raises:
            TaskNotFoundError: If the task is not registered
        """
        if task_name not in self.task_types:
            raise TaskNotFoundError(
                f"Unknown task '{task_name}'. Available tasks: {self.task_names()}", {"task": task_name}
            )
        return self.task_types[task_name]()

    def task_names(self) -> List[str]:
        return sorted(self.task_types)

    def get_task_types(self) -> Dict[str, Dict[str, Any]]:
        """
        Get information about all registered task types.

        Returns:
            Dictionary mapping task names to task info
        """
        return {
            name: {
                "name": name,
                "description": inspect.getdoc(task_class) or "",
                "category": self.categories.get(name, "general"),
                "requires_table": task_class.REQUIRES_TABLE,
            }
            for name, task_class in sorted(self.task_types.items())
        }

    def _discover_task_types(self) -> None:
        """
        Discover and register task types from the tasks package.
        Each sub-package of `tasks` is a category.
        """
        import tasks

        for _, modname, ispkg in pkgutil.iter_modules(tasks.__path__, tasks.__name__ + "."):
            module = importlib.import_module(modname)
            if ispkg:
                category = modname.split(".")[-1]
                for _, inner_name, inner_pkg in pkgutil.iter_modules(module.__path__, module.__name__ + "."):
                    if not inner_pkg:
                        self._register_tasks_from_module(importlib.import_module(inner_name), category)
            else:
                self._register_tasks_from_module(module, "general")

    def _register_tasks_from_module(self, module, category: str) -> None:
        """
        Registers all TaskBase subclasses defined in a given module.
        """
        for attr_name in dir(module):
            attr = getattr(module, attr_name)
            if inspect.isclass(attr) and \
               issubclass(attr, TaskBase) and \
               not inspect.isabstract(attr) and \
               not attr_name.startswith("_") and \
               getattr(attr, "__module__", None) == module.__name__:
                self.register_task_type(attr, category)
