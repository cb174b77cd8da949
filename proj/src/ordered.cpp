#include <ocomp/ordered.h>

#include <ocomp/completion.h>
#include <ocomp/tau_star.h>

#include <map>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Order vocabulary
//
////////////////////////////////////////////////////////////////////////////////////////////////////

void checkOrderVocabulary(const Program &program)
{
	checkOrderVocabulary(program.predicates());
}

void checkOrderVocabulary(const std::vector<Predicate> &predicates)
{
	std::set<std::string> programNames;
	for (const auto &predicate : predicates)
		programNames.insert(predicate.name);

	std::map<std::string, std::string> generated;

	const auto claim = [&](const std::string &name, const std::string &origin)
	{
		if (programNames.contains(name))
			throw CollisionError("generated symbol " + name + " clashes with a program predicate");

		const auto [position, inserted] = generated.emplace(name, origin);

		if (!inserted && position->second != origin)
			throw CollisionError("generated symbol " + name + " is ambiguous between " + position->second + " and " + origin);
	};

	for (const auto &p : predicates)
	{
		claim(levelFunctionName(p.name), p.name);

		for (const auto &q : predicates)
			claim(orderPredicateName(p.name, q.name), p.name + "," + q.name);
	}
}

Formula ordAtom(OrderVariant variant, const Predicate &q, const std::vector<FoTerm> &z, const Predicate &p, const std::vector<FoTerm> &x)
{
	if (variant == OrderVariant::OrderPredicates)
	{
		auto arguments = z;
		arguments.insert(arguments.end(), x.begin(), x.end());
		return Formula::atom(orderPredicateName(q.name, p.name), std::move(arguments));
	}

	return Formula::compare(Relation::Less, FoTerm::apply(levelFunctionName(q.name), z),
		FoTerm::apply(levelFunctionName(p.name), x));
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Axioms
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

std::vector<FoTerm> asTerms(const std::vector<Variable> &variables)
{
	std::vector<FoTerm> result;
	for (const auto &variable : variables)
		result.push_back(FoTerm::var(variable));
	return result;
}

std::vector<Variable> numbered(std::size_t first, std::size_t count)
{
	std::vector<Variable> result;
	for (std::size_t i = 0; i < count; i++)
		result.push_back(Variable{"X" + std::to_string(first + i), Sort::General});
	return result;
}

std::set<std::pair<std::string, std::string>> transitiveClosure(std::set<std::pair<std::string, std::string>> pairs)
{
	for (bool changed = true; changed;)
	{
		changed = false;

		for (const auto &[a, b] : std::set{pairs})
			for (const auto &[c, d] : std::set{pairs})
				if (b == c && pairs.emplace(a, d).second)
					changed = true;
	}

	return pairs;
}

}

std::set<std::pair<std::string, std::string>> orderEdges(const Program &program)
{
	std::set<std::pair<std::string, std::string>> pairs;

	for (const auto &rule : program.rules)
	{
		const auto head = rule.headAtom();

		if (!head)
			continue;

		for (const auto &literal : rule.positiveBody())
			pairs.emplace(literal.atom.predicate, head->predicate);
	}

	return pairs;
}

std::vector<NamedFormula> axioms(const Program &program, OrderVariant variant, bool minimal)
{
	return axioms(program.predicates(), orderEdges(program), variant, minimal);
}

std::vector<NamedFormula> axioms(const std::vector<Predicate> &predicates, const std::set<std::pair<std::string, std::string>> &edges,
	OrderVariant variant, bool minimal)
{
	std::vector<NamedFormula> result;

	if (variant == OrderVariant::LevelMapping)
	{
		for (const auto &p : predicates)
		{
			const auto x = numbered(1, p.arity);
			auto level = FoTerm::apply(levelFunctionName(p.name), asTerms(x));
			auto formula = Formula::forall(x, Formula::compare(Relation::GreaterEqual, std::move(level),
				FoTerm::constantTerm(PrecomputedTerm{0})));
			result.push_back({"nat_" + p.name, std::move(formula)});
		}

		return result;
	}

	const auto closure = transitiveClosure(edges);
	const auto wanted = [&](const Predicate &a, const Predicate &b)
	{
		return !minimal || closure.contains({a.name, b.name});
	};

	for (const auto &p : predicates)
	{
		if (!wanted(p, p))
			continue;

		const auto x = numbered(1, p.arity);
		auto arguments = asTerms(x);
		const auto second = arguments;
		arguments.insert(arguments.end(), second.begin(), second.end());
		auto formula = Formula::forall(x, Formula::negation(Formula::atom(orderPredicateName(p.name, p.name), std::move(arguments))));
		result.push_back({"irreflexivity_" + p.name, std::move(formula)});
	}

	for (const auto &p : predicates)
		for (const auto &q : predicates)
		{
			if (!wanted(p, q))
				continue;

			for (const auto &r : predicates)
			{
				if (!wanted(q, r))
					continue;

				const auto x = numbered(1, p.arity);
				const auto y = numbered(1 + p.arity, q.arity);
				const auto z = numbered(1 + p.arity + q.arity, r.arity);

				std::vector<Variable> all = x;
				all.insert(all.end(), y.begin(), y.end());
				all.insert(all.end(), z.begin(), z.end());

				const auto xt = asTerms(x);
				const auto yt = asTerms(y);
				const auto zt = asTerms(z);

				auto formula = Formula::forall(all, Formula::implies(
					Formula::conjunction(
						{
							ordAtom(variant, p, xt, q, yt),
							ordAtom(variant, q, yt, r, zt)
						}),
					ordAtom(variant, p, xt, r, zt)));

				result.push_back({"transitivity_" + p.name + "_" + q.name + "_" + r.name, std::move(formula)});
			}
		}

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Ordered completion
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

Formula conjunctionOf(std::vector<Formula> conjuncts)
{
	if (conjuncts.size() == 1)
		return std::move(conjuncts.front());

	return Formula::conjunction(std::move(conjuncts));
}

// q(t) with its values z bound, conjoined with ord(q(z), p(x))
Formula orderedLiteral(const Literal &literal, const Predicate &p, const std::vector<Variable> &x,
	OrderVariant variant, FreshVarSource &fresh)
{
	const Predicate q{literal.atom.predicate, literal.atom.arguments.size()};

	std::vector<Variable> z;
	for (std::size_t i = 0; i < q.arity; i++)
		z.push_back(fresh.fresh("Z"));

	std::vector<Formula> conjuncts;
	for (std::size_t i = 0; i < q.arity; i++)
		conjuncts.push_back(valFormula(literal.atom.arguments[i], FoTerm::var(z[i]), fresh));

	conjuncts.push_back(Formula::conjunction(
		{
			Formula::atom(q.name, asTerms(z)),
			ordAtom(variant, q, asTerms(z), p, asTerms(x))
		}));

	return Formula::exists(z, conjunctionOf(std::move(conjuncts)));
}

Formula orderedForm(const Rule &rule, const Predicate &p, const std::vector<Variable> &x,
	const OcConfig &config, FreshVarSource &fresh)
{
	std::vector<Formula> conjuncts;

	for (std::size_t i = 0; i < x.size(); i++)
		conjuncts.push_back(valFormula(rule.head.arguments[i], FoTerm::var(x[i]), fresh));

	for (const auto &element : rule.body)
	{
		const auto *literal = std::get_if<Literal>(&element);

		if (config.simplified && literal && literal->negationCount == 0)
			conjuncts.push_back(orderedLiteral(*literal, p, x, config.variant, fresh));
		else
			conjuncts.push_back(tauB(element, fresh));
	}

	if (rule.headKind == Rule::HeadKind::Choice)
		conjuncts.push_back(Formula::negation(Formula::negation(Formula::atom(p.name, asTerms(x)))));

	if (!config.simplified)
		for (const auto &literal : rule.positiveBody())
			conjuncts.push_back(orderedLiteral(literal, p, x, config.variant, fresh));

	return conjunctionOf(std::move(conjuncts));
}

}

Formula ocDef(const Program &program, const Predicate &predicate, const OcConfig &config)
{
	const auto x = headVariables(program, predicate);
	std::vector<Formula> disjuncts;

	for (const auto *rule : definingRules(program, predicate))
	{
		auto taken = rule->variables();
		for (const auto &variable : x)
			taken.insert(variable.name);

		FreshVarSource fresh{taken};

		std::vector<Variable> y;
		for (const auto &name : rule->variables())
			y.push_back(programVariable(name));

		disjuncts.push_back(Formula::exists(y, orderedForm(*rule, predicate, x, config, fresh)));
	}

	auto disjunction = disjuncts.size() == 1 ? std::move(disjuncts.front()) : Formula::disjunction(std::move(disjuncts));

	return Formula::forall(x, Formula::implies(Formula::atom(predicate.name, asTerms(x)), std::move(disjunction)));
}

TheoryBundle orderedCompletion(const Program &program, const OcConfig &config)
{
	program.checkArities();
	checkOrderVocabulary(program);

	const auto parts = completionParts(program, config.completeUndefined);

	TheorySection constraints{"constraints", {}};
	TheorySection axiomSection{"axioms", axioms(program, config.variant, config.minimalAxioms)};
	TheorySection rules{"rules", {}};
	TheorySection definitions{"definitions", {}};

	for (std::size_t i = 0; i < parts.constraintFormulas.size(); i++)
		constraints.formulas.push_back({"constraint_" + std::to_string(i), parts.constraintFormulas[i]});

	for (const auto &predicate : parts.predicates)
	{
		rules.formulas.push_back({"rules_" + predicate.predicate.name, predicate.rules});
		definitions.formulas.push_back({"definition_" + predicate.predicate.name, ocDef(program, predicate.predicate, config)});
	}

	TheoryBundle bundle;
	bundle.sections = {std::move(constraints), std::move(axiomSection), std::move(rules), std::move(definitions)};
	return bundle;
}

}
