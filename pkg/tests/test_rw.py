import pytest

from qsc.compositions import compositions
from qsc.dirt import is_dirt
from qsc.qsym import IMMACULATE, YOUNG_QS, dimm_to_yqs, yns_to_imm
from qsc.rw import Node, rw_dual, rw_forward, tree_to_dot, tree_to_json


def _leaves(node: Node):
    if node.is_leaf:
        yield node
    for child in node.children:
        yield from _leaves(child)


def test_forward_tree_two_two():
    root, expansion = rw_forward((2, 2))
    assert expansion.basis == YOUNG_QS
    assert expansion.coeffs == {(2, 2): 1, (1, 3): 1}
    leaves = list(_leaves(root))
    assert len(leaves) == 2
    assert all(is_dirt(leaf.filling) for leaf in leaves)
    assert root.filling == ((1, 2),)


def test_forward_tree_goldens():
    _, expansion = rw_forward((2, 2, 2))
    assert expansion.coeffs == {
        (2, 2, 2): 1, (2, 1, 3): 1, (1, 3, 2): 1, (1, 2, 3): 2, (1, 1, 4): 1}
    root, expansion = rw_forward((3, 2, 1))
    assert len(list(_leaves(root))) == 8
    assert expansion.coeffs == {
        (3, 2, 1): 1, (3, 1, 2): 1, (2, 3, 1): 1, (2, 1, 3): 1,
        (1, 4, 1): 1, (1, 3, 2): 1, (1, 2, 3): 1, (1, 1, 4): 1}


def test_forward_tree_interior_nodes_are_dirts():
    root, _ = rw_forward((1, 3, 2))
    def walk(node):
        assert is_dirt(node.filling)
        for child in node.children:
            walk(child)
    walk(root)


def test_dual_tree_goldens():
    root, expansion = rw_dual((1, 2, 3))
    assert expansion.basis == IMMACULATE
    assert expansion.coeffs == {
        (3, 2, 1): 1, (3, 1, 2): 1, (2, 3, 1): 1, (2, 2, 2): 2,
        (2, 1, 3): 1, (1, 3, 2): 1, (1, 2, 3): 1}
    assert len(list(_leaves(root))) == 8
    assert root.filling == ((None,), (None, None), (None, None, None))


def test_dual_tree_has_dead_branches():
    # Some branches stall before every cell is filled; they stay in the
    # tree as childless non-leaves.
    root, _ = rw_dual((1, 2, 3))
    dead = []
    def walk(node):
        if not node.is_leaf and not node.children:
            dead.append(node)
        for child in node.children:
            walk(child)
    walk(root)
    assert dead
    assert all(any(v is None for row in n.filling for v in row) for n in dead)


def test_trees_agree_with_coefficient_maps():
    for n in range(1, 6):
        for alpha in compositions(n):
            assert rw_forward(alpha)[1] == dimm_to_yqs(alpha)
            assert rw_dual(alpha)[1] == yns_to_imm(alpha)


def test_empty_composition():
    root, expansion = rw_forward(())
    assert root.is_leaf and expansion.coeffs == {(): 1}
    root, expansion = rw_dual(())
    assert root.is_leaf and expansion.coeffs == {(): 1}


def test_tree_json():
    root, _ = rw_forward((2, 2))
    obj = tree_to_json(root, "forward")
    assert obj["rows"] == [[1, 2]]
    assert not obj["leaf"]
    shapes = sorted(tuple(child["shape"]) for child in obj["children"]
                    if child["leaf"])
    assert shapes == [(1, 3), (2, 2)]
    dual_root, _ = rw_dual((1, 2))
    dual_obj = tree_to_json(dual_root, "dual")
    assert dual_obj["rows"] == [[None], [None, None]]
    betas = [leaf["beta"] for leaf in _json_leaves(dual_obj)]
    assert sorted(map(tuple, betas)) == [(1, 2), (2, 1)]


def _json_leaves(obj):
    if obj["leaf"]:
        yield obj
    for child in obj["children"]:
        yield from _json_leaves(child)


def test_tree_dot():
    root, _ = rw_forward((2,))
    text = tree_to_dot(root, "forward")
    assert text.startswith("digraph tree {")
    assert text.endswith("}\n")
    assert "peripheries=2" in text
    assert "n0" in text
    with pytest.raises(ValueError):
        tree_to_dot(root, "sideways")


def test_trees_are_deterministic():
    first = tree_to_json(rw_forward((2, 2, 1))[0], "forward")
    second = tree_to_json(rw_forward((2, 2, 1))[0], "forward")
    assert first == second
    assert tree_to_dot(rw_dual((2, 2))[0], "dual") == \
        tree_to_dot(rw_dual((2, 2))[0], "dual")
