import os
import pytest
from toybits.yaml_file_functions import (create_workflow,
                                         load_workflow_from_yaml_file,
                                         ordered_dump, ordered_load)


module_root = os.path.join(os.path.dirname(__file__), "..")
workflow_file = os.path.join(module_root, "tests", "test_rewrite_workflow.yaml")


def test_ordered_load_keeps_key_order():
    loaded = ordered_load("b: 1\na: 2\nc: 3\n")
    assert list(loaded.keys()) == ["b", "a", "c"], "Expected keys in file order."
    assert ordered_dump(loaded) == "b: 1\na: 2\nc: 3\n"


def test_load_workflow_from_yaml_file():
    workflow = load_workflow_from_yaml_file(workflow_file)
    assert workflow["max_steps"] == 50
    assert workflow["rewrite_steps"][0] == "spider"
    assert workflow["rewrite_steps"][2][1]["colour"] == "X"


def test_load_workflow_defaults(tmp_path):
    filename = os.path.join(tmp_path, "empty.yaml")
    with open(filename, "w", encoding="utf-8") as file:
        file.write("rewrite_steps: [spider]\n")
    workflow = load_workflow_from_yaml_file(filename)
    assert workflow["max_steps"] == 1000, "Expected the default step limit."


def test_create_workflow_normalizes_steps():
    workflow = create_workflow(rewrite_steps=["spider", ["loop", {"colour": "X", "reverse": True}]],
                               max_steps=10)
    assert workflow["rewrite_steps"] == [
        ["spider", {"colour": "Z", "reverse": False, "upside_down": False}],
        ["loop", {"colour": "X", "reverse": True, "upside_down": False}]]
    assert workflow["max_steps"] == 10


def test_create_workflow_unknown_rule():
    with pytest.raises(ValueError) as msg:
        create_workflow(rewrite_steps=["spyder"])
    assert "Unknown rule: spyder" in str(msg.value)


def test_workflow_to_and_from_yaml(tmp_path):
    filename = os.path.join(tmp_path, "workflow.yaml")
    workflow = create_workflow(filename, rewrite_steps=["spider", ["euler", {"reverse": True}]], max_steps=7)
    with open(filename, "r", encoding="utf-8") as file:
        assert file.readline().startswith("# Toybits rewriting workflow")
    reloaded = load_workflow_from_yaml_file(filename)
    assert reloaded == workflow, "Expected the stored workflow to be read back unchanged."


def test_create_workflow_existing_file(tmp_path):
    filename = os.path.join(tmp_path, "workflow.yaml")
    create_workflow(filename, rewrite_steps=["spider"])
    with pytest.raises(AssertionError) as msg:
        create_workflow(filename, rewrite_steps=["spider"])
    assert "already exists" in str(msg.value)
