import logging
from typing import Optional
from ..Diagram import Diagram, is_boundary
from ..diagram_operations import components, remove_nodes, subdiagram
from ..interpretation import interpret


logger = logging.getLogger("toybits")


def drop_scalars(diagram: Diagram) -> Optional[Diagram]:
    """Remove every closed component that denotes the non-empty scalar.

    Components without boundary endpoints are evaluated exactly. If one of them
    denotes the empty relation, the whole diagram is zero and None is returned.

    .. testcode::

        from toybits import Diagram, Node, Phase
        from toybits.rewriting import drop_scalars

        zero = Diagram({"a": Node("Z", Phase(1, 1))}, [])
        print(drop_scalars(zero))

    Should output

    .. testoutput::

        None

    """
    closed = [component for component in components(diagram)
              if not any(is_boundary(endpoint) for endpoint in component)]
    removed = set()
    for component in closed:
        if interpret(subdiagram(diagram, component)).is_empty:
            logger.info("Diagram contains a zero scalar component %s.", sorted(component))
            return None
        removed |= component
    return remove_nodes(diagram, removed)
