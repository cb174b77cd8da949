#include <catch_amalgamated.hpp>

#include "support/corpus.h"

#include <ocomp/completion.h>
#include <ocomp/ordered.h>
#include <ocomp/simplify.h>
#include <ocomp/tau_star.h>
#include <ocomp/theory.h>

using namespace ocomp;
using namespace ocomp::testing;

namespace
{

std::vector<std::string> printed(const TheoryBundle &bundle)
{
	std::vector<std::string> result;
	for (const auto &section : bundle.sections)
		for (const auto &named : section.formulas)
			result.push_back(section.name + ": " + named.name + ": " + named.formula.toString());
	return result;
}

std::vector<std::string> sectionNames(const TheoryBundle &bundle)
{
	std::vector<std::string> result;
	for (const auto &section : bundle.sections)
		result.push_back(section.name);
	return result;
}

Domain propertyDomain()
{
	Domain domain{{PrecomputedTerm::symbol("a")}};
	for (std::int64_t n = -1; n <= 2; n++)
		domain.general.insert(PrecomputedTerm{n});
	return domain;
}

const std::vector<OcConfig> &allConfigs()
{
	static const auto configs = []
	{
		std::vector<OcConfig> result;
		for (const auto variant : {OrderVariant::OrderPredicates, OrderVariant::LevelMapping})
			for (const bool simplified : {true, false})
				for (const bool completeUndefined : {true, false})
					for (const bool minimal : {true, false})
						result.push_back(OcConfig{variant, simplified, completeUndefined, minimal});
		return result;
	}();

	return configs;
}

}

TEST_CASE("the program path and the theory path agree", "[ordered][property]")
{
	Random random{37};

	for (int i = 0; i < 200; i++)
	{
		const auto program = randomProgram(random);
		const auto theory = analyzeTauStar(tauStarProgram(program));
		INFO(program.toString());

		for (const auto &config : allConfigs())
			CHECK(printed(orderedCompletion(program, config)) == printed(orderedCompletion(theory, config)));
	}
}

TEST_CASE("sections come in a fixed order", "[ordered]")
{
	const auto bundle = orderedCompletion(parseProgram("p :- q.\n:- p."));
	CHECK(sectionNames(bundle) == std::vector<std::string>{"constraints", "axioms", "rules", "definitions"});
}

TEST_CASE("axiom counts", "[ordered]")
{
	const auto program = parseProgram("p(X) :- q(X).\np(X) :- not r(X).\nr(1).\nq(1).");
	const std::size_t n = program.predicates().size();

	CHECK(axioms(program, OrderVariant::OrderPredicates).size() == n + n * n * n);
	CHECK(axioms(program, OrderVariant::LevelMapping).size() == n);

	// a single edge q -> p closes no chain and no cycle
	CHECK(axioms(program, OrderVariant::OrderPredicates, true).empty());
}

TEST_CASE("minimal axioms follow the transitive closure", "[ordered]")
{
	const auto program = parseProgram("b :- a.\nc :- b.\na :- c.");
	const auto minimal = axioms(program, OrderVariant::OrderPredicates, true);

	std::size_t irreflexivity = 0;
	std::size_t transitivity = 0;
	for (const auto &named : minimal)
	{
		irreflexivity += named.name.starts_with("irreflexivity");
		transitivity += named.name.starts_with("transitivity");
	}

	// the cycle makes every pair reachable
	CHECK(irreflexivity == 3);
	CHECK(transitivity == 27);
}

TEST_CASE("axioms of the tight program", "[ordered]")
{
	const auto program = parseProgram("p(X) :- q(X).\np(X) :- not r(X).\nr(1).\nq(1).");

	std::vector<std::string> lines;
	for (const auto &named : axioms(program, OrderVariant::OrderPredicates))
		lines.push_back(named.formula.toString());

	for (const auto &expected : {"forall X1 not less_q_q(X1, X1)", "forall X1 not less_p_p(X1, X1)", "forall X1 not less_r_r(X1, X1)",
		"forall X1 X2 X3 (less_q_q(X1, X2) and less_q_q(X2, X3) -> less_q_q(X1, X3))",
		"forall X1 X2 X3 (less_q_p(X1, X2) and less_p_r(X2, X3) -> less_q_r(X1, X3))"})
		CHECK(std::find(lines.begin(), lines.end(), expected) != lines.end());
}

TEST_CASE("ordered definition of the example program", "[ordered]")
{
	const auto program = parseProgram("p(A) :- q(A-1).");

	OcConfig config;
	CHECK(ocDef(program, Predicate{"p", 1}, config).toString()
		== "forall V1 (p(V1) -> exists A (V1 = A and exists Z (exists I$i J$i (Z = I$i - J$i and I$i = A and J$i = 1) and (q(Z) and less_q_p(Z, V1)))))");

	config.variant = OrderVariant::LevelMapping;
	CHECK(ocDef(program, Predicate{"p", 1}, config).toString()
		== "forall V1 (p(V1) -> exists A (V1 = A and exists Z (exists I$i J$i (Z = I$i - J$i and I$i = A and J$i = 1) and (q(Z) and lvl_q(Z) < lvl_p(V1)))))");
}

TEST_CASE("order vocabulary collisions", "[ordered]")
{
	CHECK_THROWS_AS(orderedCompletion(parseProgram("p :- q.\nless_q_p.")), CollisionError);
	CHECK_THROWS_AS(orderedCompletion(parseProgram("p(X) :- q(X).\nlvl_p(1).")), CollisionError);
	// less_a_b_c is both less_a_b + c and less_a + b_c
	CHECK_THROWS_AS(orderedCompletion(parseProgram("a_b :- c.\na :- b_c.")), CollisionError);
	CHECK_NOTHROW(orderedCompletion(parseProgram("p :- q.")));
}

TEST_CASE("stable models satisfy ordered completion under their rank order", "[ordered][property]")
{
	Random random{41};
	const auto domain = propertyDomain();

	for (int i = 0; i < 300; i++)
	{
		const auto program = randomProgram(random);
		const auto ground = instantiate(program, domain);
		INFO(program.toString());

		OcConfig orderConfig;
		orderConfig.completeUndefined = true;
		OcConfig levelConfig = orderConfig;
		levelConfig.variant = OrderVariant::LevelMapping;

		const CompiledFormula ordered{orderedCompletion(program, orderConfig).conjunction()};
		const CompiledFormula levelled{orderedCompletion(program, levelConfig).conjunction()};

		for (const auto &model : stableModels(program, domain))
		{
			INFO(toString(model));
			const auto rank = wellSupport(ground, model).rank;

			DerivationOrder order;
			std::map<GroundAtom, std::int64_t> levels;
			for (const auto &[a, ra] : rank)
			{
				levels[a] = static_cast<std::int64_t>(ra);
				for (const auto &[b, rb] : rank)
					if (ra < rb)
						order.emplace(a, b);
			}

			Extras orderExtras;
			orderExtras.generalDomain = domain.general;
			orderExtras.intRange = IntRange{-1, 2};
			Extras levelExtras = orderExtras;

			orderExtras.orderFacts = orderFacts(order);
			levelExtras.levelMap = levels;

			CHECK(ordered.evaluate(extendStandard(model, SignatureExt::SigmaOrder, orderExtras)));
			CHECK(levelled.evaluate(extendStandard(model, SignatureExt::SigmaLevel, levelExtras)));
		}
	}
}

TEST_CASE("ordered completion entails the completion", "[ordered][property]")
{
	Random random{43};
	const auto domain = propertyDomain();
	const std::vector<Predicate> predicates{{"p", 1}, {"q", 1}, {"r", 0}};

	for (int i = 0; i < 200; i++)
	{
		const auto program = randomProgram(random);
		INFO(program.toString());

		OcConfig config;
		config.completeUndefined = true;
		const CompiledFormula ordered{orderedCompletion(program, config).conjunction()};
		const CompiledFormula completed{completion(program, true)};

		const auto all = program.predicates();

		for (int j = 0; j < 20; j++)
		{
			const auto interpretation = randomInterpretation(random, all.empty() ? predicates : all, domain);

			std::vector<GroundAtom> atoms{interpretation.begin(), interpretation.end()};
			std::shuffle(atoms.begin(), atoms.end(), random);

			DerivationOrder order;
			for (std::size_t a = 0; a < atoms.size(); a++)
				for (std::size_t b = a + 1; b < atoms.size(); b++)
					order.emplace(atoms[a], atoms[b]);

			const auto facts = orderFacts(order);

			Extras extras;
			extras.generalDomain = domain.general;
			extras.intRange = IntRange{-1, 2};
			Extras plain = extras;
			extras.orderFacts = facts;

			if (ordered.evaluate(extendStandard(interpretation, SignatureExt::SigmaOrder, extras)))
				CHECK(completed.evaluate(extendStandard(interpretation, SignatureExt::Sigma0, plain)));
		}
	}
}
