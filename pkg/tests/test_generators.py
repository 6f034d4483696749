import statistics

import pytest

from netslice.generators import GenSpec, Model, gen_ba, gen_er, gen_geo
from netslice.graph import GenerationError


def test_er_p_one_is_complete_graph():
    g = gen_er(GenSpec(model=Model.ER, n_target=10, er_p=1.0, seed=0))
    assert g.node_count == 10
    assert g.edge_count == 45


def test_er_p_near_zero_is_generation_error():
    with pytest.raises(GenerationError):
        gen_er(GenSpec(model=Model.ER, n_target=10, er_p=1e-9, seed=0))


def test_er_mean_degree_calibration():
    ks = [gen_er(GenSpec(model=Model.ER, seed=s)).mean_degree() for s in range(100)]
    assert abs(statistics.mean(ks) - 5.7) <= 0.5


def test_er_output_is_connected():
    for s in range(20):
        g = gen_er(GenSpec(model=Model.ER, seed=s))
        assert len(g.component_of(0)) == g.node_count


def test_ba_closed_form_edge_count():
    g = gen_ba(GenSpec(model=Model.BA, n_target=100, ba_attach=3, seed=4))
    assert g.edge_count == 294
    assert g.mean_degree() == pytest.approx(5.88)


def test_ba_degenerate_attach_rejected():
    with pytest.raises(ValueError):
        GenSpec(model=Model.BA, n_target=100, ba_attach=100)


def test_ba_connected_and_heavy_tailed():
    hits = 0
    for s in range(500):
        g = gen_ba(GenSpec(model=Model.BA, seed=s))
        assert len(g.component_of(0)) == 100
        if max(g.degree(i) for i in range(100)) > 3 * g.mean_degree():
            hits += 1
    assert hits / 500 >= 0.95


def test_geo_mean_degree_calibration():
    ks = [gen_geo(GenSpec(model=Model.GEO, seed=s)).mean_degree() for s in range(100)]
    assert abs(statistics.mean(ks) - 5.7) <= 0.3


def test_geo_connected_and_planar():
    for s in range(20):
        g = gen_geo(GenSpec(model=Model.GEO, seed=s))
        assert len(g.component_of(0)) == 100
        assert g.edge_count <= 3 * 100 - 6


def test_geo_2x2_zero_jitter():
    g = gen_geo(GenSpec(model=Model.GEO, n_target=4, geo_rows=2, geo_cols=2,
                        geo_jitter=0.0, seed=0))
    assert g.node_count == 4
    assert g.edge_count == 5  # square plus the tie-break diagonal


def test_geo_exports_layout():
    g = gen_geo(GenSpec(model=Model.GEO, seed=3))
    assert g.layout is not None and len(g.layout) == 100
    assert "# layout" in g.to_edgelist()


def test_geo_shape_must_match_n():
    with pytest.raises(ValueError):
        GenSpec(model=Model.GEO, n_target=100, geo_rows=5, geo_cols=10)


@pytest.mark.parametrize("model", [Model.ER, Model.BA, Model.GEO])
def test_determinism_bit_for_bit(model):
    a = None
    for _ in range(2):
        g = {Model.ER: gen_er, Model.BA: gen_ba, Model.GEO: gen_geo}[model](
            GenSpec(model=model, seed=77))
        if a is None:
            a = g.to_edgelist()
        else:
            assert g.to_edgelist() == a


def test_invariants_hold_on_generator_output():
    for model in (Model.ER, Model.BA, Model.GEO):
        g = {Model.ER: gen_er, Model.BA: gen_ba, Model.GEO: gen_geo}[model](
            GenSpec(model=model, seed=5))
        g.check_invariants()
