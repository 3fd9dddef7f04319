#include "doctest.h"
#include "support.hpp"

#include "leibniz/census.hpp"
#include "leibniz/families.hpp"
#include "leibniz/io.hpp"

using namespace leibniz;
using namespace testing_support;

namespace {

void check_parse_error(const std::string& text, std::size_t line, std::size_t column)
{
    try {
        parse_algebra_file(text);
        FAIL("no parse error for: " << text);
    } catch (const ParseError& e) {
        CHECK_MESSAGE(e.line() == line, text, " -> ", e.what());
        CHECK_MESSAGE(e.column() == column, text, " -> ", e.what());
    }
}

Algebra parse(const std::string& text)
{
    return parse_algebra_file(text).algebra;
}

}  // namespace

TEST_SUITE("text format")
{
    TEST_CASE("basic parsing")
    {
        const Algebra a = parse("field GF(5)\ndim 3\n[1,1] = 1*2\n[1,2] = 3\n");
        CHECK(a.field() == Field::prime(5));
        CHECK(a.tensor() == cyclic_nilpotent(3, Field::prime(5)).tensor());
        CHECK_FALSE(a.is_checked());
        CHECK(a.labels() == std::vector<std::string>{"e1", "e2", "e3"});
    }

    TEST_CASE("rational coefficients, signs, labels and comments")
    {
        const AlgebraFile f = parse_algebra_file(
            "# first\n\n  # second  \nfield Q\ndim 2\nbasis x y\n[ 1 , 2 ] = -1/2*1 + 2\n[2,2] = 0\n");
        CHECK(f.comments == std::vector<std::string>{" first", " second  "});
        const Field q;
        CHECK(f.algebra.product(0, 1) == Vector{Scalar::parse(q, "-1/2"), Scalar(q, 1)});
        CHECK(is_zero(f.algebra.product(1, 1)));
        CHECK(f.algebra.labels() == std::vector<std::string>{"x", "y"});
        CHECK(f.algebra.has_custom_labels());
    }

    TEST_CASE("errors carry line and column")
    {
        check_parse_error("field Q\ndim 2\n[1,3] = 1*2\n", 3, 4);
        check_parse_error("field Q\ndim 2\n[1,1] = 1*3\n", 3, 11);
        check_parse_error("field Q\ndim 2\n[1,1] = 1*2\n[1,1] = 1*1\n", 4, 1);
        check_parse_error("field GF(4)\n", 1, 7);
        check_parse_error("field GF(5)\ndim 2\n[1,1] = 7*2\n", 3, 9);
        check_parse_error("field Q\ndim 2\n[1,1] = 1*2 + 1*2\n", 3, 17);
        check_parse_error("field Q\ndim 2\nbasis a a\n", 3, 9);
        check_parse_error("field Q\ndim 2\nbasis a\n", 3, 1);
        check_parse_error("dim 2\n", 1, 1);
        check_parse_error("field Q\ndim 2\n[1,1] 1*2\n", 3, 7);
        check_parse_error("field Q\ndim 2\nbracket\n", 3, 1);
    }

    TEST_CASE("corpus files round trip byte for byte")
    {
        for (const auto& p : corpus_files()) {
            const std::string text = slurp(p);
            CHECK_MESSAGE(emit_algebra_file(parse_algebra_file(text)) == text, p.filename().string());
        }
    }

    TEST_CASE("emission of random algebras is a fixed point of parse-then-emit")
    {
        std::mt19937_64 rng(60);
        for (const Field f : {Field{}, Field::prime(3), Field::prime(65521)})
            for (int trial = 0; trial < 40; ++trial) {
                StructureTensor t(f, 3);
                std::bernoulli_distribution sparse(0.3);
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j)
                        for (std::size_t k = 0; k < 3; ++k)
                            if (sparse(rng)) t(i, j, k) = random_scalar(f, rng);
                const Algebra a(t);
                const std::string once = emit_algebra_file(a, {"random"});
                const AlgebraFile back = parse_algebra_file(once);
                CHECK(back.algebra.tensor() == t);
                CHECK(emit_algebra_file(back) == once);
            }
    }

    TEST_CASE("family output carries the parameters and custom labels")
    {
        FamilyParams p;
        p.family = FamilyId::C;
        p.n = 3;
        const std::string text = emit_algebra_file(build_family(p), {" " + describe(p)});
        CHECK(text == slurp(corpus_dir() / "c3_q.alg"));
    }
}

TEST_SUITE("json")
{
    TEST_CASE("scalars stay exact")
    {
        const Field q;
        CHECK(to_json(Scalar::parse(q, "-7/3")) == "-7/3");
        CHECK(to_json(Scalar(Field::prime(5), 4)) == "4");
        CHECK(to_json(Subspace::zero(q, 2)).dump() == R"({"dim":0,"basis":[]})");
    }

    TEST_CASE("reports match golden files")
    {
        const auto load = [](const std::string& name) { return read_algebra_file((corpus_dir() / name).string()).algebra.checked(); };
        const auto golden = [](const std::string& name) { return Json::parse(slurp(golden_dir() / name)); };
        CHECK(analysis_json(load("cyclic4_q.alg")) == golden("cyclic4_q.analyze.json"));
        CHECK(analysis_json(load("heisenberg_q.alg")) == golden("heisenberg_q.analyze.json"));
        CHECK(derivations_json(load("cyclic3_gf5.alg"), DerivationKind::left) == golden("cyclic3_gf5.derivations.json"));
        CHECK(derivations_json(load("cyclic3_gf5.alg"), DerivationKind::right) == golden("cyclic3_gf5.rderivations.json"));
        const Algebra a = load("a_i2_gf3.alg");
        CHECK(maximal_cyclic_json(a, maximal_cyclic_report(a)) == golden("a_i2_gf3.maximal.json"));
    }

    TEST_CASE("census records match the golden stream")
    {
        CensusConfig c;
        c.dim = 2;
        const CensusResult r = run_census(c);
        std::string stream;
        for (const auto& rec : r.records) stream += census_record_json(rec, c).dump() + "\n";
        stream += census_summary_json(r).dump() + "\n";
        CHECK(stream == slurp(golden_dir() / "census_d2_p2.jsonl"));
    }

    TEST_CASE("analysis json reflects the invariants")
    {
        const Algebra a = cyclic_nilpotent(5, Field{});
        const Json j = analysis_json(a);
        CHECK(j["class"] == 5);
        CHECK(j["leibniz_kernel"]["dim"] == 4);
        CHECK(j["lower_series"].size() == 6);
        CHECK(j["nilpotent"] == true);
        const Json l2 = analysis_json(dim2_L2(Field{}));
        CHECK(l2["class"].is_null());
    }
}
