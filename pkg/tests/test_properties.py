import random

import pytest
from hypothesis import given, settings, strategies as st

import checks
from topfacering.facering import (
    degrees,
    homogeneous_component,
    linear_combine,
    multiply,
    random_face_element,
    random_member,
    RingElement,
)
from topfacering.models import BUILTINS, build_builtin

MODELS = {name: build_builtin(name) for name in BUILTINS}
MODELS["triangle/GF3"] = build_builtin("triangle", 3)
MODELS["connected-sum/GF2"] = build_builtin("connected-sum", 2)

seeds = st.integers(0, 2**32 - 1)


@pytest.mark.parametrize("name", MODELS)
@settings(max_examples=100, deadline=None)
@given(seed=seeds)
def test_ring_axioms(name, seed):
    checks.ring_axioms(MODELS[name].complex, random.Random(seed))


@pytest.mark.parametrize("name", MODELS)
@settings(max_examples=100, deadline=None)
@given(seed=seeds)
def test_closure_and_theta_split(name, seed):
    checks.closure(MODELS[name].complex, random.Random(seed))


@pytest.mark.parametrize("name", MODELS)
@settings(max_examples=50, deadline=None)
@given(seed=seeds)
def test_lemmas(name, seed):
    checks.lemmas(MODELS[name].complex, random.Random(seed))


@pytest.mark.parametrize("name", MODELS)
@settings(max_examples=50, deadline=None)
@given(seed=seeds)
def test_grading(name, seed):
    C = MODELS[name].complex
    rng = random.Random(seed)
    a = random_member(C, rng)
    parts = [(1, homogeneous_component(a, d)) for d in degrees(a)]
    assert (linear_combine(parts) if parts else RingElement(C)) == a
    _, x = random_face_element(C, rng)
    _, y = random_face_element(C, rng)
    for dx in degrees(x):
        for dy in degrees(y):
            prod = multiply(C, homogeneous_component(x, dx), homogeneous_component(y, dy))
            assert degrees(prod) in ([], [dx + dy])


@pytest.mark.parametrize("name", MODELS)
@settings(max_examples=30, deadline=None)
@given(seed=seeds)
def test_eta_linear(name, seed):
    M = MODELS[name]
    checks.eta_linear(M.complex, M.torus, random.Random(seed))
