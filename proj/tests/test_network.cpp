#include <numbers>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "ifsim/network.hpp"

using namespace ifsim;
using testutil::near;

namespace {

bool contains(const std::vector<std::string>& v, const std::string& needle) {
    for (const auto& s : v)
        if (s.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_SUITE_BEGIN("network");

TEST_CASE("beamsplitter stage matrix") {
    const Real x = sqrtl(0.5L);
    for (Real t : {0.0L, 0.31L, 0.99L}) {
        CMatrix m = stage_matrix(make_beamsplitter(1, 2), 3, t);
        CHECK(m.at(0, 0) == Complex(x, 0));
        CHECK(m.at(0, 1) == Complex(x, 0));
        CHECK(m.at(1, 0) == Complex(x, 0));
        CHECK(m.at(1, 1) == Complex(-x, 0));
        CHECK(m.at(2, 2) == Complex(1, 0));
        CHECK(m.at(0, 2) == Complex(0, 0));
        CHECK(is_unitary(m, 1e-12L));
    }
    // port order does not matter; the sign convention is fixed
    CHECK(stage_matrix(make_beamsplitter(2, 1), 3, 0.5L).at(1, 1) == Complex(-x, 0));
}

TEST_CASE("mirror stage is the identity at t=0") {
    Stage s = Mirror{{"A", 1, 37, std::numbers::pi / 100.0}};
    CMatrix m = stage_matrix(s, 3, 0.0L);
    CHECK(m.at(0, 0) == Complex(1, 0));
    CHECK(m.at(1, 1) == Complex(1, 0));
    CHECK(m.at(2, 2) == Complex(1, 0));
}

TEST_CASE("mirror stage applies the modulated phase") {
    const double a0 = std::numbers::pi / 100.0;
    Stage s = Mirror{{"A", 2, 37, a0}};
    const Real t = 0.118L;
    CMatrix m = stage_matrix(s, 3, t);
    const Real ft = 37.0L * t;
    const Real phi =
        static_cast<Real>(a0) * sinl(2 * std::numbers::pi_v<Real> * (ft - floorl(ft)));
    CHECK(near(m.at(1, 1).real(), cosl(phi), 1e-19L));
    CHECK(near(m.at(1, 1).imag(), sinl(phi), 1e-19L));
    CHECK(m.at(0, 0) == Complex(1, 0));
    CHECK(is_unitary(m, 1e-12L));
}

TEST_CASE("static phase stage") {
    const double phase = std::numbers::pi / 20.0;
    CMatrix m = stage_matrix(StaticPhase{2, phase}, 3, 0.42L);
    CHECK(m.at(0, 0) == Complex(1, 0));
    CHECK(near(m.at(1, 1).real(), cosl(static_cast<Real>(phase)), 1e-19L));
    CHECK(near(m.at(1, 1).imag(), sinl(static_cast<Real>(phase)), 1e-19L));
    CHECK(m.at(2, 2) == Complex(1, 0));
}

TEST_CASE("preset layout") {
    InterferometerSpec spec = danan_preset(0.0);
    CHECK(spec.path_count == 3);
    CHECK(spec.injection_port == 1);
    CHECK(spec.detection_port == 2);
    REQUIRE(spec.stages.size() == 9);

    // chronological order: BS(1,3), E, C, BS(1,2), A, B, BS(1,2), F, BS(2,3)
    const auto* bs0 = std::get_if<Beamsplitter>(&spec.stages[0]);
    REQUIRE(bs0 != nullptr);
    CHECK(bs0->port_i == 1);
    CHECK(bs0->port_j == 3);

    struct Expected { size_t index; const char* label; int port; int freq; };
    for (const auto& e : {Expected{1, "E", 1, 159}, Expected{2, "C", 3, 43},
                          Expected{4, "A", 1, 37}, Expected{5, "B", 2, 41},
                          Expected{7, "F", 2, 179}}) {
        const auto* m = std::get_if<Mirror>(&spec.stages[e.index]);
        REQUIRE(m != nullptr);
        CHECK(m->modulator.label == e.label);
        CHECK(m->modulator.port == e.port);
        CHECK(m->modulator.frequency == e.freq);
        CHECK(m->modulator.amplitude == std::numbers::pi / 100.0);
    }
    const auto* bs8 = std::get_if<Beamsplitter>(&spec.stages[8]);
    REQUIRE(bs8 != nullptr);
    CHECK(bs8->port_i == 2);
    CHECK(bs8->port_j == 3);
}

TEST_CASE("detuned preset inserts one static phase before the recombiner") {
    const double detune = std::numbers::pi / 20.0;
    InterferometerSpec tuned = danan_preset(0.0);
    InterferometerSpec det = danan_preset(detune);
    REQUIRE(det.stages.size() == 10);

    const auto* sp = std::get_if<StaticPhase>(&det.stages[6]);
    REQUIRE(sp != nullptr);
    CHECK(sp->port == 2);
    CHECK(sp->phase == detune);
    // mirror B right before it, the recombining beamsplitter right after
    CHECK(std::get_if<Mirror>(&det.stages[5]) != nullptr);
    CHECK(std::get_if<Beamsplitter>(&det.stages[7]) != nullptr);

    det.stages.erase(det.stages.begin() + 6);
    CHECK(det == tuned);
}

TEST_CASE("preset pipeline at t=0 sends half the amplitude to the detector") {
    InterferometerSpec spec = danan_preset(0.0);
    CVector v = CVector::basis(3, spec.injection_port);
    for (const Stage& s : spec.stages) v = mat_vec(stage_matrix(s, 3, 0.0L), v);
    CHECK(near(v[1].real(), 0.5L, 1e-15L));
    CHECK(near(v[1].imag(), 0.0L, 1e-15L));
}

TEST_CASE("every preset stage matrix is unitary at sample times") {
    for (double detune : {0.0, std::numbers::pi / 20.0}) {
        InterferometerSpec spec = danan_preset(detune);
        for (const Stage& s : spec.stages)
            for (Real t : {0.0L, 0.13L, 0.77L})
                CHECK(is_unitary(stage_matrix(s, spec.path_count, t), 1e-12L));
    }
}

TEST_CASE("validate accepts the preset") {
    CHECK(validate(danan_preset(0.0)).empty());
    CHECK(validate(danan_preset(std::numbers::pi / 20.0)).empty());
}

TEST_CASE("validate reports violations without aborting") {
    InterferometerSpec spec = danan_preset(0.0);
    spec.stages[0] = Beamsplitter{2, 2};
    CHECK(contains(validate(spec), "beamsplitter ports must differ"));

    spec = danan_preset(0.0);
    std::get<Mirror>(spec.stages[1]).modulator.frequency = 0;
    CHECK(contains(validate(spec), "frequency must be a positive integer"));

    spec = danan_preset(0.0);
    std::get<Mirror>(spec.stages[1]).modulator.port = 9;
    CHECK(contains(validate(spec), "mirror port out of range"));

    spec = danan_preset(0.0);
    std::get<Mirror>(spec.stages[1]).modulator.label = "C";
    CHECK(contains(validate(spec), "duplicate modulator label"));

    spec = danan_preset(0.0);
    spec.detection_port = 4;
    CHECK(contains(validate(spec), "detection port out of range"));

    spec = danan_preset(0.0);
    spec.stages.clear();
    CHECK(contains(validate(spec), "stage list must not be empty"));

    spec = danan_preset(0.0);
    spec.path_count = 1;
    CHECK_FALSE(validate(spec).empty());
}

TEST_CASE("random specs from the generator validate cleanly") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto spec = testutil::random_spec(rng);
        CHECK(validate(spec).empty());
    }
}

TEST_SUITE_END();
