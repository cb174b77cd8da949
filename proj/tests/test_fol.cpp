#include <catch_amalgamated.hpp>

#include "support/corpus.h"

#include <ocomp/fol.h>

#include <functional>

using namespace ocomp;
using namespace ocomp::testing;

namespace
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Naive evaluator over explicit assignments
//
////////////////////////////////////////////////////////////////////////////////////////////////////

using Assignment = std::map<Variable, PrecomputedTerm>;

std::vector<PrecomputedTerm> generalUniverse(const FiniteStdInterp &model)
{
	auto universe = model.generalDomain;
	if (model.intRange)
		for (auto n = model.intRange->low; n <= model.intRange->high; n++)
			universe.insert(PrecomputedTerm{n});
	return {universe.begin(), universe.end()};
}

std::vector<PrecomputedTerm> integerUniverse(const FiniteStdInterp &model)
{
	std::set<PrecomputedTerm> universe;
	for (const auto &value : model.generalDomain)
		if (value.isNumeral())
			universe.insert(value);
	if (model.intRange)
		for (auto n = model.intRange->low; n <= model.intRange->high; n++)
			universe.insert(PrecomputedTerm{n});
	return {universe.begin(), universe.end()};
}

PrecomputedTerm naiveTerm(const FoTerm &term, const Assignment &assignment)
{
	switch (term.kind)
	{
		case FoTerm::Kind::Variable:
			return assignment.at(term.variable);
		case FoTerm::Kind::Constant:
			return term.constant;
		case FoTerm::Kind::Absolute:
		{
			const auto value = naiveTerm(term.arguments[0], assignment).numeral();
			return PrecomputedTerm{value < 0 ? -value : value};
		}
		case FoTerm::Kind::Plus:
			return PrecomputedTerm{naiveTerm(term.arguments[0], assignment).numeral() + naiveTerm(term.arguments[1], assignment).numeral()};
		case FoTerm::Kind::Minus:
			return PrecomputedTerm{naiveTerm(term.arguments[0], assignment).numeral() - naiveTerm(term.arguments[1], assignment).numeral()};
		case FoTerm::Kind::Multiply:
			return PrecomputedTerm{naiveTerm(term.arguments[0], assignment).numeral() * naiveTerm(term.arguments[1], assignment).numeral()};
		case FoTerm::Kind::Function:
			break;
	}

	throw Error("unexpected term");
}

bool naiveEvaluate(const Formula &formula, const FiniteStdInterp &model, Assignment &assignment)
{
	switch (formula.kind)
	{
		case Formula::Kind::Predicate:
		{
			GroundAtom atom{formula.predicate, {}};
			for (const auto &argument : formula.arguments)
				atom.arguments.push_back(naiveTerm(argument, assignment));
			return model.base.contains(atom) || model.orderFacts.contains(atom);
		}
		case Formula::Kind::Comparison:
			return holds(formula.relation, precomputedCompare(naiveTerm(formula.arguments[0], assignment), naiveTerm(formula.arguments[1], assignment)));
		case Formula::Kind::Bottom:
			return false;
		case Formula::Kind::And:
			for (const auto &child : formula.children)
				if (!naiveEvaluate(child, model, assignment))
					return false;
			return true;
		case Formula::Kind::Or:
			for (const auto &child : formula.children)
				if (naiveEvaluate(child, model, assignment))
					return true;
			return false;
		case Formula::Kind::Implies:
			return !naiveEvaluate(formula.left(), model, assignment) || naiveEvaluate(formula.right(), model, assignment);
		case Formula::Kind::Forall:
		case Formula::Kind::Exists:
		{
			const bool universal = formula.kind == Formula::Kind::Forall;
			const auto saved = assignment;

			const std::function<bool(std::size_t)> quantify = [&](std::size_t index) -> bool
			{
				if (index == formula.variables.size())
					return naiveEvaluate(formula.body(), model, assignment);

				const auto &variable = formula.variables[index];
				const auto universe = variable.sort == Sort::Integer ? integerUniverse(model) : generalUniverse(model);

				for (const auto &value : universe)
				{
					assignment[variable] = value;
					if (quantify(index + 1) != universal)
						return !universal;
				}

				return universal;
			};

			const auto result = quantify(0);
			assignment = saved;
			return result;
		}
	}

	return false;
}

bool naiveEvaluate(const Formula &formula, const FiniteStdInterp &model)
{
	Assignment assignment;
	return naiveEvaluate(formula, model, assignment);
}

Formula spec(const std::string &text)
{
	const auto formulas = parseSpec(text);
	REQUIRE(formulas.size() == 1);
	return formulas.front();
}

FiniteStdInterp model(Interpretation atoms, std::set<PrecomputedTerm> domain, std::optional<IntRange> range = std::nullopt)
{
	Extras extras;
	extras.generalDomain = std::move(domain);
	extras.intRange = range;
	return extendStandard(atoms, SignatureExt::Sigma0, std::move(extras));
}

}

TEST_CASE("evaluation agrees with a naive evaluator", "[fol][property]")
{
	Random random{5};

	for (int i = 0; i < 3000; i++)
	{
		const auto formula = randomFormula(random);
		const auto interpretation = randomFormulaModel(random);
		INFO(formula.toString());

		const auto expected = naiveEvaluate(formula, interpretation);
		CHECK(evaluate(formula, interpretation) == expected);
		CHECK(CompiledFormula{formula}.evaluate(interpretation) == expected);
	}
}

TEST_CASE("spec formulas print and reparse", "[fol][property]")
{
	Random random{9};

	for (int i = 0; i < 2000; i++)
	{
		const auto formula = randomFormula(random);
		const auto printed = formula.toString();
		INFO(printed);

		const auto reparsed = parseSpec(printed + ".");
		REQUIRE(reparsed.size() == 1);

		// one-element connectives print as their element, so compare after one round trip
		const auto normal = reparsed.front().toString();
		CHECK(parseSpec(normal + ".").front().toString() == normal);

		const auto interpretation = randomFormulaModel(random);
		CHECK(evaluate(reparsed.front(), interpretation) == evaluate(formula, interpretation));
	}
}

TEST_CASE("printing", "[fol]")
{
	CHECK(spec("forall X p(X).").toString() == "forall X p(X)");
	CHECK(spec("forall X$ (X$ >= 1 -> p(X$)).").toString() == "forall X$i (X$i >= 1 -> p(X$i))");
	CHECK(spec("not p.").toString() == "not p");
	CHECK(spec("#true.").toString() == "#true");
	CHECK(spec("#false.").toString() == "#false");
	CHECK(spec("p and q or r.").toString() == "p and q or r");
	CHECK(spec("p and (q or r).").toString() == "p and (q or r)");
	CHECK(spec("p -> q -> r.").toString() == "p -> (q -> r)");
	CHECK(spec("(p -> q) -> r.").toString() == "(p -> q) -> r");
	CHECK(spec("exists N$i (N$i = |N$i| * 2 - 1 and q(N$i + 1)).").toString() == "exists N$i (N$i = |N$i| * 2 - 1 and q(N$i + 1))");

	const auto reversed = Formula::implies(Formula::atom("q"), Formula::atom("p"), true);
	CHECK(reversed.toString() == "p <- q");
}

TEST_CASE("free variables and substitution", "[fol]")
{
	const Variable x{"X"};
	const Variable y{"Y"};
	const auto formula = Formula::exists({y}, Formula::conjunction({Formula::atom("p", {FoTerm::var(x), FoTerm::var(y)}),
		Formula::forall({x}, Formula::atom("q", {FoTerm::var(x)}))}));

	CHECK(formula.freeVariables() == std::set<Variable>{x});

	const auto replaced = substitute(formula, x, FoTerm::constantTerm(PrecomputedTerm{1}));
	CHECK(replaced.toString() == "exists Y (p(1, Y) and forall X q(X))");

	const auto captured = substitute(formula, x, FoTerm::var(y));
	CHECK(captured.freeVariables() == std::set<Variable>{y});
	CHECK(captured.toString() != "exists Y (p(Y, Y) and forall X q(X))");
}

TEST_CASE("substitution commutes with evaluation", "[fol][property]")
{
	Random random{13};
	const Variable x{"X"};

	for (int i = 0; i < 1000; i++)
	{
		const auto body = randomFormula(random, 3);
		const auto open = Formula::conjunction({Formula::atom("p", {FoTerm::var(x)}), body});
		const auto interpretation = randomFormulaModel(random);

		for (const auto &value : interpretation.generalDomain)
		{
			const auto instance = substitute(open, x, FoTerm::constantTerm(value));
			Assignment assignment{{x, value}};
			CHECK(evaluate(instance, interpretation) == naiveEvaluate(open, interpretation, assignment));
		}
	}
}

TEST_CASE("canonical renaming", "[fol]")
{
	const auto a = spec("forall A B (p(A) -> exists C q(B, C)).");
	const auto b = spec("forall X Y (p(X) -> exists Z q(Y, Z)).");

	CHECK(canonicalRenaming(a) == canonicalRenaming(b));
	CHECK(canonicalRenaming(a).toString() == "forall X1 X2 (p(X1) -> exists X3 q(X2, X3))");
	CHECK(canonicalRenaming(Formula::atom("p", {FoTerm::var("X")})).toString() == "p(X)");
}

TEST_CASE("finite standard interpretations", "[fol]")
{
	const Interpretation atoms{GroundAtom{"p", {1}}};

	CHECK(evaluate(spec("forall X p(X)."), model(atoms, {PrecomputedTerm{1}})));
	CHECK_FALSE(evaluate(spec("forall X p(X)."), model(atoms, {PrecomputedTerm{1}, PrecomputedTerm{2}})));
	CHECK(evaluate(spec("exists X$ (X$ > 1 and X$ < 3)."), model({}, {}, IntRange{0, 5})));
	CHECK_THROWS_AS(evaluate(spec("exists X$ (X$ = 1)."), model({}, {PrecomputedTerm::symbol("a")})), DomainError);

	CHECK_THROWS(extendStandard({}, SignatureExt::Sigma0, Extras{{}, std::nullopt, Interpretation{}, std::nullopt}));
}

TEST_CASE("order facts and level maps", "[fol]")
{
	Extras orderExtras;
	orderExtras.generalDomain = {PrecomputedTerm{1}};
	orderExtras.orderFacts = Interpretation{GroundAtom{"less_q_p", {1, 1}}};
	const auto ordered = extendStandard({}, SignatureExt::SigmaOrder, orderExtras);

	CHECK(evaluate(spec("less_q_p(1, 1)."), ordered));
	CHECK_FALSE(evaluate(spec("less_p_q(1, 1)."), ordered));

	Extras levelExtras;
	levelExtras.generalDomain = {PrecomputedTerm{1}};
	levelExtras.levelMap = std::map<GroundAtom, std::int64_t>{{GroundAtom{"q", {1}}, 2}};
	const auto levelled = extendStandard({}, SignatureExt::SigmaLevel, levelExtras);

	const auto comparison = Formula::compare(Relation::Less,
		FoTerm::apply(levelFunctionName("p"), {FoTerm::constantTerm(PrecomputedTerm{1})}),
		FoTerm::apply(levelFunctionName("q"), {FoTerm::constantTerm(PrecomputedTerm{1})}));

	CHECK(evaluate(comparison, levelled));
	CHECK(orderPredicateName("q", "p") == "less_q_p");
}
