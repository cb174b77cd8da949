#include <catch_amalgamated.hpp>

#include "support/corpus.h"

#include <ocomp/tau_star.h>

using namespace ocomp;
using namespace ocomp::testing;

namespace
{

std::vector<std::string> printed(const std::vector<Formula> &formulas)
{
	std::vector<std::string> result;
	for (const auto &formula : formulas)
		result.push_back(formula.toString());
	return result;
}

std::vector<std::string> tauStar(const std::string &program)
{
	return printed(tauStarProgram(parseProgram(program)));
}

}

TEST_CASE("val(t, V) holds exactly for the values of t", "[tau_star][property]")
{
	Random random{17};
	const Variable value{"V"};

	Extras extras;
	extras.generalDomain = {PrecomputedTerm::symbol("a"), PrecomputedTerm{Infimum{}}};
	extras.intRange = IntRange{-12, 12};
	const auto model = extendStandard({}, SignatureExt::Sigma0, extras);

	std::size_t checked = 0;

	for (int i = 0; i < 300; i++)
	{
		const auto term = randomGroundTerm(random, 2);
		const auto expected = values(term);

		FreshVarSource fresh{{"V"}};
		const auto formula = valFormula(term, FoTerm::var(value), fresh);
		INFO(term.toString() << " : " << formula.toString());

		auto candidates = expected;
		for (std::int64_t n = -6; n <= 6; n++)
			candidates.insert(PrecomputedTerm{n});
		candidates.insert(PrecomputedTerm::symbol("a"));
		candidates.insert(PrecomputedTerm{Infimum{}});

		for (const auto &candidate : candidates)
		{
			EvaluationStats stats;
			const auto holds = evaluate(substitute(formula, value, FoTerm::constantTerm(candidate)), model, &stats);

			if (stats.boundHit)
				continue;

			checked++;
			CHECK(holds == expected.contains(candidate));
		}
	}

	CHECK(checked > 2000);
}

TEST_CASE("val of simple terms", "[tau_star]")
{
	FreshVarSource fresh;
	const auto v = FoTerm::var("V");

	CHECK(valFormula(ProgramTerm::precomputed(PrecomputedTerm{3}), v, fresh).toString() == "V = 3");
	CHECK(valFormula(ProgramTerm::variable("X"), v, fresh).toString() == "V = X");
}

TEST_CASE("program from the ordered completion example", "[tau_star]")
{
	CHECK(tauStar("p(A) :- q(A-1).") == std::vector<std::string>{
		"forall V1 A (V1 = A and exists Z (exists I$i J$i (Z = I$i - J$i and I$i = A and J$i = 1) and q(Z)) -> p(V1))"});
}

TEST_CASE("rule shapes under tau-star", "[tau_star]")
{
	CHECK(tauStar("p.") == std::vector<std::string>{"#true -> p"});
	CHECK(tauStar("q(1).") == std::vector<std::string>{"forall V1 (V1 = 1 -> q(V1))"});
	CHECK(tauStar("p(X) :- not r(X).") == std::vector<std::string>{
		"forall V1 X (V1 = X and exists Z (Z = X and not r(Z)) -> p(V1))"});
	CHECK(tauStar("{p(X)} :- q(X).") == std::vector<std::string>{
		"forall V1 X (V1 = X and exists Z (Z = X and q(Z)) and not not p(V1) -> p(V1))"});
	CHECK(tauStar(":- p, not q.") == std::vector<std::string>{"not (p and not q)"});
	CHECK(tauStar("p :- X < 1.") == std::vector<std::string>{"forall X (exists Z Z1 (Z = X and Z1 = 1 and Z < Z1) -> p)"});
	CHECK(tauStar("").empty());
}

TEST_CASE("tau-star output reparses as the same formulas", "[tau_star][property]")
{
	Random random{19};

	for (int i = 0; i < 300; i++)
	{
		const auto program = randomProgram(random);
		const auto formulas = tauStarProgram(program);

		std::string text;
		for (const auto &formula : formulas)
			text += formula.toString() + ".\n";

		INFO(text);
		const auto reparsed = parseSpec(text);
		REQUIRE(reparsed.size() == formulas.size());
		CHECK(printed(reparsed) == printed(formulas));

		for (const auto &formula : formulas)
			CHECK(formula.freeVariables().empty());
	}
}

TEST_CASE("tau-star is satisfied exactly by models of the program", "[tau_star][property]")
{
	Random random{23};
	Domain domain{{PrecomputedTerm::symbol("a")}};
	for (std::int64_t n = -1; n <= 2; n++)
		domain.general.insert(PrecomputedTerm{n});

	const std::vector<Predicate> predicates{{"p", 1}, {"q", 1}, {"r", 0}};

	for (int i = 0; i < 200; i++)
	{
		const auto program = randomProgram(random);
		const auto ground = instantiate(program, domain);
		const CompiledFormula theory{Formula::conjunction(tauStarProgram(program))};
		INFO(program.toString());

		for (int j = 0; j < 10; j++)
		{
			const auto interpretation = randomInterpretation(random, predicates, domain);

			Extras extras;
			extras.generalDomain = domain.general;
			extras.intRange = IntRange{-1, 2};

			CHECK(theory.evaluate(extendStandard(interpretation, SignatureExt::Sigma0, extras)) == satisfiesProgram(ground, interpretation));
		}
	}
}

TEST_CASE("fresh variables avoid taken names", "[tau_star]")
{
	FreshVarSource fresh{{"V1", "Z"}};

	CHECK(fresh.freshTuple("V", 2) == std::vector<Variable>{{"V2"}, {"V3"}});
	CHECK(fresh.fresh("Z").name == "Z1");
	CHECK(fresh.fresh("Z").name == "Z2");
	CHECK(fresh.fresh("I", Sort::Integer) == Variable{"I", Sort::Integer});
}
