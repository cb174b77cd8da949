#include <ocomp/completion.h>

#include <ocomp/tau_star.h>

#include <functional>
#include <map>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Completion
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::vector<const Rule *> definingRules(const Program &program, const Predicate &predicate)
{
	std::vector<const Rule *> result;

	for (const auto &rule : program.rules)
	{
		const auto head = rule.headAtom();

		if (head && head->predicate == predicate.name && head->arguments.size() == predicate.arity)
			result.push_back(&rule);
	}

	return result;
}

namespace
{

std::set<std::string> definingVariableNames(const Program &program, const Predicate &predicate)
{
	std::set<std::string> names;

	for (const auto *rule : definingRules(program, predicate))
		names.merge(rule->variables());

	return names;
}

std::vector<FoTerm> asTerms(const std::vector<Variable> &variables)
{
	std::vector<FoTerm> result;
	for (const auto &variable : variables)
		result.push_back(FoTerm::var(variable));
	return result;
}

}

std::vector<Variable> headVariables(const Program &program, const Predicate &predicate)
{
	FreshVarSource fresh{definingVariableNames(program, predicate)};
	return fresh.freshTuple("V", predicate.arity);
}

Formula formDisjunction(const Program &program, const Predicate &predicate, const std::vector<Variable> &x)
{
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

		disjuncts.push_back(Formula::exists(y, form(*rule, x, fresh)));
	}

	if (disjuncts.size() == 1)
		return std::move(disjuncts.front());

	return Formula::disjunction(std::move(disjuncts));
}

Formula compRules(const Program &program, const Predicate &predicate)
{
	const auto x = headVariables(program, predicate);
	auto head = Formula::atom(predicate.name, asTerms(x));

	return Formula::forall(x, Formula::implies(formDisjunction(program, predicate, x), std::move(head), true));
}

Formula compDef(const Program &program, const Predicate &predicate)
{
	const auto x = headVariables(program, predicate);
	auto head = Formula::atom(predicate.name, asTerms(x));

	return Formula::forall(x, Formula::implies(std::move(head), formDisjunction(program, predicate, x)));
}

Formula constraintFormula(const Rule &constraint)
{
	if (constraint.headKind != Rule::HeadKind::Constraint)
		throw Error("not a constraint: " + constraint.toString());

	return tauStarRule(constraint);
}

CompletionParts completionParts(const Program &program, bool completeUndefined)
{
	program.checkArities();

	CompletionParts parts;

	for (const auto &rule : program.rules)
		if (rule.headKind == Rule::HeadKind::Constraint)
			parts.constraintFormulas.push_back(constraintFormula(rule));

	parts.constraints = parts.constraintFormulas.size() == 1
		? parts.constraintFormulas.front() : Formula::conjunction(parts.constraintFormulas);

	const auto predicates = completeUndefined ? program.predicates() : program.headPredicates();

	for (const auto &predicate : predicates)
		parts.predicates.push_back(PredicateCompletion{predicate, compRules(program, predicate), compDef(program, predicate)});

	return parts;
}

Formula completion(const Program &program, bool completeUndefined)
{
	const auto parts = completionParts(program, completeUndefined);

	std::vector<Formula> conjuncts = parts.constraintFormulas;

	for (const auto &predicate : parts.predicates)
	{
		conjuncts.push_back(predicate.rules);
		conjuncts.push_back(predicate.definition);
	}

	return Formula::conjunction(std::move(conjuncts));
}

TheoryBundle completionBundle(const Program &program, bool completeUndefined)
{
	const auto parts = completionParts(program, completeUndefined);

	TheorySection constraints{"constraints", {}};
	TheorySection rules{"rules", {}};
	TheorySection definitions{"definitions", {}};

	for (std::size_t i = 0; i < parts.constraintFormulas.size(); i++)
		constraints.formulas.push_back({"constraint_" + std::to_string(i), parts.constraintFormulas[i]});

	for (const auto &predicate : parts.predicates)
	{
		rules.formulas.push_back({"rules_" + predicate.predicate.name, predicate.rules});
		definitions.formulas.push_back({"definition_" + predicate.predicate.name, predicate.definition});
	}

	TheoryBundle bundle;
	bundle.sections = {std::move(constraints), std::move(rules), std::move(definitions)};
	return bundle;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Tightness
//
////////////////////////////////////////////////////////////////////////////////////////////////////

bool isTight(const Program &program)
{
	std::map<std::string, std::set<std::string>> edges;

	for (const auto &rule : program.rules)
	{
		const auto head = rule.headAtom();

		if (!head)
			continue;

		for (const auto &literal : rule.positiveBody())
			edges[head->predicate].insert(literal.atom.predicate);
	}

	// 0 unvisited, 1 on stack, 2 done
	std::map<std::string, int> state;

	std::function<bool(const std::string &)> acyclicFrom = [&](const std::string &node)
	{
		auto &mark = state[node];

		if (mark == 1)
			return false;
		if (mark == 2)
			return true;

		mark = 1;

		for (const auto &next : edges[node])
			if (!acyclicFrom(next))
				return false;

		state[node] = 2;
		return true;
	};

	for (const auto &[node, targets] : std::map{edges})
		if (!acyclicFrom(node))
			return false;

	return true;
}

}
