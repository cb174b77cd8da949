#include <ocomp/theory.h>

#include <ocomp/tau_star.h>

#include <algorithm>
#include <cctype>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Shape analysis
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

void collectPredicates(const Formula &formula, std::vector<Predicate> &result)
{
	if (formula.kind == Formula::Kind::Predicate)
	{
		Predicate predicate{formula.predicate, formula.arguments.size()};

		if (std::find(result.begin(), result.end(), predicate) == result.end())
			result.push_back(std::move(predicate));

		return;
	}

	for (const auto &child : formula.children)
		collectPredicates(child, result);
}

std::vector<FoTerm> asTerms(const std::vector<Variable> &variables)
{
	std::vector<FoTerm> result;
	for (const auto &variable : variables)
		result.push_back(FoTerm::var(variable));
	return result;
}

std::vector<Formula> conjunctsOf(const Formula &formula)
{
	if (formula.kind == Formula::Kind::And)
		return formula.children;

	return {formula};
}

Formula conjunctionOf(std::vector<Formula> conjuncts)
{
	if (conjuncts.size() == 1)
		return std::move(conjuncts.front());

	return Formula::conjunction(std::move(conjuncts));
}

// the atom q(z) closing a positive literal conjunct
const Formula *literalAtom(const Formula &conjunct)
{
	if (conjunct.kind == Formula::Kind::Predicate)
		return &conjunct;

	if (conjunct.kind != Formula::Kind::Exists || conjunct.body().kind != Formula::Kind::And || conjunct.body().children.empty())
		return nullptr;

	const auto &last = conjunct.body().children.back();

	if (last.kind != Formula::Kind::Predicate || last.arguments.size() != conjunct.variables.size())
		return nullptr;

	for (std::size_t i = 0; i < last.arguments.size(); i++)
		if (last.arguments[i].kind != FoTerm::Kind::Variable || last.arguments[i].variable != conjunct.variables[i])
			return nullptr;

	return &last;
}

}

TauStarTheory analyzeTauStar(const std::vector<Formula> &formulas)
{
	TauStarTheory theory;

	for (const auto &formula : formulas)
	{
		std::vector<Variable> variables;
		const Formula *body = &formula;

		while (body->kind == Formula::Kind::Forall)
		{
			variables.insert(variables.end(), body->variables.begin(), body->variables.end());
			body = &body->body();
		}

		if (body->kind != Formula::Kind::Implies)
			throw Error("not a tau* formula: " + formula.toString());

		if (body->right().isBottom())
		{
			collectPredicates(body->left(), theory.predicates);
			theory.constraints.push_back(formula);
			continue;
		}

		const auto &head = body->right();

		if (head.kind != Formula::Kind::Predicate)
			throw Error("not a tau* formula: " + formula.toString());

		DefiningFormula definition;
		definition.head = Predicate{head.predicate, head.arguments.size()};

		for (const auto &argument : head.arguments)
		{
			const bool fits = argument.kind == FoTerm::Kind::Variable && argument.variable.sort == Sort::General
				&& std::find(variables.begin(), variables.end(), argument.variable) != variables.end()
				&& std::find(definition.headVariables.begin(), definition.headVariables.end(), argument.variable) == definition.headVariables.end();

			if (!fits)
				throw Error("head of " + formula.toString() + " is not a tuple of distinct bound variables");

			definition.headVariables.push_back(argument.variable);
		}

		for (const auto &variable : variables)
			if (std::find(definition.headVariables.begin(), definition.headVariables.end(), variable) == definition.headVariables.end())
				definition.localVariables.push_back(variable);

		definition.form = body->left();

		collectPredicates(head, theory.predicates);
		collectPredicates(definition.form, theory.predicates);
		theory.definitions.push_back(std::move(definition));
	}

	return theory;
}

std::vector<Predicate> headPredicates(const TauStarTheory &theory)
{
	std::vector<Predicate> result;

	for (const auto &definition : theory.definitions)
		if (std::find(result.begin(), result.end(), definition.head) == result.end())
			result.push_back(definition.head);

	return result;
}

std::vector<std::size_t> positiveLiteralConjuncts(const std::vector<Formula> &conjuncts)
{
	std::vector<std::size_t> result;

	for (std::size_t i = 0; i < conjuncts.size(); i++)
		if (literalAtom(conjuncts[i]))
			result.push_back(i);

	return result;
}

std::set<std::pair<std::string, std::string>> orderEdges(const TauStarTheory &theory)
{
	std::set<std::pair<std::string, std::string>> edges;

	for (const auto &definition : theory.definitions)
	{
		const auto conjuncts = conjunctsOf(definition.form);

		for (const auto index : positiveLiteralConjuncts(conjuncts))
			edges.emplace(literalAtom(conjuncts[index])->predicate, definition.head.name);
	}

	return edges;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Completion
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

struct AlignedDefinitions
{
	std::vector<Variable> x;
	// exists y form, one per defining formula, head variables renamed to x
	std::vector<std::pair<std::vector<Variable>, Formula>> forms;
};

AlignedDefinitions align(const TauStarTheory &theory, const Predicate &predicate)
{
	std::vector<const DefiningFormula *> definitions;
	std::set<std::string> taken;

	for (const auto &definition : theory.definitions)
	{
		if (definition.head != predicate)
			continue;

		definitions.push_back(&definition);

		std::set<std::string> names;
		collectAllVariableNames(definition.form, names);
		for (const auto &variable : definition.localVariables)
			names.insert(variable.name);
		for (const auto &variable : definition.headVariables)
			names.erase(variable.name);

		taken.merge(names);
	}

	AlignedDefinitions result;
	result.x = FreshVarSource{taken}.freshTuple("V", predicate.arity);

	for (const auto *definition : definitions)
	{
		std::set<std::string> reserved = taken;
		for (const auto &variable : result.x)
			reserved.insert(variable.name);
		for (const auto &variable : definition->headVariables)
			reserved.insert(variable.name);

		FreshVarSource placeholders{reserved};
		auto form = definition->form;

		std::vector<Variable> temporary;
		for (const auto &variable : definition->headVariables)
		{
			temporary.push_back(placeholders.fresh(variable.name + "_h"));
			form = substitute(form, variable, FoTerm::var(temporary.back()));
		}

		for (std::size_t i = 0; i < temporary.size(); i++)
			form = substitute(form, temporary[i], FoTerm::var(result.x[i]));

		result.forms.emplace_back(definition->localVariables, std::move(form));
	}

	return result;
}

Formula disjunctionOf(std::vector<Formula> disjuncts)
{
	if (disjuncts.size() == 1)
		return std::move(disjuncts.front());

	return Formula::disjunction(std::move(disjuncts));
}

std::vector<TheorySection> sectionsFor(const TauStarTheory &theory)
{
	TheorySection constraints{"constraints", {}};

	for (std::size_t i = 0; i < theory.constraints.size(); i++)
		constraints.formulas.push_back({"constraint_" + std::to_string(i), theory.constraints[i]});

	return {std::move(constraints)};
}

Formula renameBound(const Formula &formula, FreshVarSource &fresh)
{
	auto result = formula;

	if (result.isQuantifier())
	{
		for (auto &variable : result.variables)
		{
			auto base = variable.name;
			while (base.size() > 1 && std::isdigit(static_cast<unsigned char>(base.back())))
				base.pop_back();

			const auto renamed = fresh.fresh(base, variable.sort);
			result.children[0] = substitute(result.children[0], variable, FoTerm::var(renamed));
			variable = renamed;
		}
	}

	for (auto &child : result.children)
		child = renameBound(child, fresh);

	return result;
}

Formula orderedConjunct(const Formula &conjunct, const Predicate &p, const std::vector<Variable> &x, OrderVariant variant)
{
	if (conjunct.kind == Formula::Kind::Predicate)
	{
		const Predicate q{conjunct.predicate, conjunct.arguments.size()};
		return Formula::conjunction({conjunct, ordAtom(variant, q, conjunct.arguments, p, asTerms(x))});
	}

	auto result = conjunct;
	auto &last = result.children[0].children.back();
	const Predicate q{last.predicate, last.arguments.size()};
	last = Formula::conjunction({last, ordAtom(variant, q, last.arguments, p, asTerms(x))});
	return result;
}

}

TheoryBundle completionBundle(const TauStarTheory &theory, bool completeUndefined)
{
	auto sections = sectionsFor(theory);
	TheorySection rules{"rules", {}};
	TheorySection definitions{"definitions", {}};

	for (const auto &predicate : completeUndefined ? theory.predicates : headPredicates(theory))
	{
		const auto aligned = align(theory, predicate);

		std::vector<Formula> disjuncts;
		for (const auto &[local, form] : aligned.forms)
			disjuncts.push_back(Formula::exists(local, form));

		const auto disjunction = disjunctionOf(std::move(disjuncts));
		const auto head = Formula::atom(predicate.name, asTerms(aligned.x));

		rules.formulas.push_back({"rules_" + predicate.name, Formula::forall(aligned.x, Formula::implies(disjunction, head, true))});
		definitions.formulas.push_back({"definition_" + predicate.name, Formula::forall(aligned.x, Formula::implies(head, disjunction))});
	}

	sections.push_back(std::move(rules));
	sections.push_back(std::move(definitions));

	TheoryBundle bundle;
	bundle.sections = std::move(sections);
	return bundle;
}

TheoryBundle orderedCompletion(const TauStarTheory &theory, const OcConfig &config)
{
	checkOrderVocabulary(theory.predicates);

	auto sections = sectionsFor(theory);
	TheorySection rules{"rules", {}};
	TheorySection definitions{"definitions", {}};

	for (const auto &predicate : config.completeUndefined ? theory.predicates : headPredicates(theory))
	{
		const auto aligned = align(theory, predicate);

		std::vector<Formula> plain;
		std::vector<Formula> ordered;

		for (const auto &[local, form] : aligned.forms)
		{
			plain.push_back(Formula::exists(local, form));

			auto conjuncts = conjunctsOf(form);
			const auto positive = positiveLiteralConjuncts(conjuncts);

			if (config.simplified)
			{
				for (const auto index : positive)
					conjuncts[index] = orderedConjunct(conjuncts[index], predicate, aligned.x, config.variant);
			}
			else
			{
				std::set<std::string> taken;
				collectAllVariableNames(form, taken);
				for (const auto &variable : local)
					taken.insert(variable.name);
				for (const auto &variable : aligned.x)
					taken.insert(variable.name);

				FreshVarSource fresh{taken};
				const auto original = conjuncts;

				for (const auto index : positive)
					conjuncts.push_back(orderedConjunct(renameBound(original[index], fresh), predicate, aligned.x, config.variant));
			}

			ordered.push_back(Formula::exists(local, conjuncts.empty() ? Formula::top() : conjunctionOf(std::move(conjuncts))));
		}

		const auto head = Formula::atom(predicate.name, asTerms(aligned.x));

		rules.formulas.push_back({"rules_" + predicate.name,
			Formula::forall(aligned.x, Formula::implies(disjunctionOf(std::move(plain)), head, true))});
		definitions.formulas.push_back({"definition_" + predicate.name,
			Formula::forall(aligned.x, Formula::implies(head, disjunctionOf(std::move(ordered))))});
	}

	sections.insert(sections.begin() + 1, TheorySection{"axioms", axioms(theory.predicates, orderEdges(theory), config.variant, config.minimalAxioms)});
	sections.push_back(std::move(rules));
	sections.push_back(std::move(definitions));

	TheoryBundle bundle;
	bundle.sections = std::move(sections);
	return bundle;
}

}
