"""Utility functions for working with nested mappings."""

from typing import Any


def merge_mappings(m_1: Any, m_2: Any) -> Any:
    """Merge two nested mappings, values from the second taking precedence.

    Nested mappings are merged recursively, anything else is replaced.

    Example:
    -------
        ```python
        merge_mappings(
            {"filter": {"iterations": 10, "ring_depth": 2}},
            {"filter": {"iterations": 3}},
        )
        # {"filter": {"iterations": 3, "ring_depth": 2}}
        ```

    """
    match m_1, m_2:
        case {**m_1}, {**m_2}:
            return {
                k: merge_mappings(m_1[k], m_2[k]) if k in m_1 and k in m_2 else
                m_2.get(k, m_1.get(k))
                for k in (*m_1, *(k for k in m_2 if k not in m_1))
            }
        case _, None:
            return m_1
        case _:
            return m_2
