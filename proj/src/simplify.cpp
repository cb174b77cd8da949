#include <ocomp/simplify.h>

#include <algorithm>
#include <numeric>
#include <optional>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Helpers
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

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

bool occursFree(const Formula &formula, const Variable &variable)
{
	return formula.freeVariables().contains(variable);
}

bool hasName(const std::vector<Variable> &variables, const std::string &name)
{
	return std::any_of(variables.begin(), variables.end(), [&](const auto &variable) { return variable.name == name; });
}

Variable freshVariable(const Variable &base, const std::set<std::string> &taken)
{
	Variable result = base;

	for (std::size_t index = 1; taken.contains(result.name); index++)
		result.name = base.name + "_" + std::to_string(index);

	return result;
}

std::optional<PrecomputedTerm> evaluateGround(const FoTerm &term)
{
	const auto numeralOperands = [&]() -> std::optional<std::pair<std::int64_t, std::int64_t>>
	{
		const auto left = evaluateGround(term.arguments[0]);
		const auto right = evaluateGround(term.arguments[1]);

		if (!left || !right || !left->isNumeral() || !right->isNumeral())
			return std::nullopt;

		return std::pair{left->numeral(), right->numeral()};
	};

	try
	{
		switch (term.kind)
		{
			case FoTerm::Kind::Constant:
				return term.constant;
			case FoTerm::Kind::Absolute:
			{
				const auto operand = evaluateGround(term.arguments[0]);
				if (!operand || !operand->isNumeral())
					return std::nullopt;
				return PrecomputedTerm{checkedAbs(operand->numeral())};
			}
			case FoTerm::Kind::Plus:
				if (const auto operands = numeralOperands())
					return PrecomputedTerm{checkedAdd(operands->first, operands->second)};
				return std::nullopt;
			case FoTerm::Kind::Minus:
				if (const auto operands = numeralOperands())
					return PrecomputedTerm{checkedSub(operands->first, operands->second)};
				return std::nullopt;
			case FoTerm::Kind::Multiply:
				if (const auto operands = numeralOperands())
					return PrecomputedTerm{checkedMul(operands->first, operands->second)};
				return std::nullopt;
			default:
				return std::nullopt;
		}
	}
	catch (const OverflowError &)
	{
		return std::nullopt;
	}
}

// an equation that fixes the value of x to a term of a compatible sort
bool bindable(const Variable &variable, const FoTerm &term)
{
	if (term.contains(variable))
		return false;

	return variable.sort == Sort::General || term.isIntegerSorted();
}

struct Binding
{
	std::size_t conjunct;
	Variable variable;
	FoTerm term;
};

std::optional<Binding> findBinding(const std::vector<Formula> &conjuncts, const std::vector<Variable> &variables)
{
	for (std::size_t i = 0; i < conjuncts.size(); i++)
	{
		const auto &conjunct = conjuncts[i];

		if (conjunct.kind != Formula::Kind::Comparison || conjunct.relation != Relation::Equal)
			continue;

		for (std::size_t side = 0; side < 2; side++)
		{
			const auto &candidate = conjunct.arguments[side];
			const auto &other = conjunct.arguments[1 - side];

			if (candidate.kind != FoTerm::Kind::Variable)
				continue;

			if (std::find(variables.begin(), variables.end(), candidate.variable) == variables.end())
				continue;

			if (bindable(candidate.variable, other))
				return Binding{i, candidate.variable, other};
		}
	}

	return std::nullopt;
}

// F entails that x is an integer
bool impliesInteger(const Formula &formula, const Variable &variable)
{
	switch (formula.kind)
	{
		case Formula::Kind::Comparison:
		{
			if (formula.relation != Relation::Equal)
				return false;

			for (std::size_t side = 0; side < 2; side++)
			{
				const auto &candidate = formula.arguments[side];

				if (candidate.kind == FoTerm::Kind::Variable && candidate.variable == variable
					&& formula.arguments[1 - side].isIntegerSorted())
					return true;
			}

			return false;
		}
		case Formula::Kind::And:
			return std::any_of(formula.children.begin(), formula.children.end(),
				[&](const auto &child) { return impliesInteger(child, variable); });
		case Formula::Kind::Exists:
			if (std::find(formula.variables.begin(), formula.variables.end(), variable) != formula.variables.end())
				return false;
			return impliesInteger(formula.body(), variable);
		default:
			return false;
	}
}

std::vector<Variable> without(std::vector<Variable> variables, const Variable &removed)
{
	variables.erase(std::remove(variables.begin(), variables.end(), removed), variables.end());
	return variables;
}

// exists z B1 follows from exists y B2 by matching bound variables and comparing conjuncts
bool entails(const Formula &stronger, const Formula &weaker)
{
	std::vector<Variable> strongVariables;
	const Formula *strongBody = &stronger;

	if (stronger.kind == Formula::Kind::Exists)
	{
		strongVariables = stronger.variables;
		strongBody = &stronger.body();
	}

	const auto strongConjuncts = conjunctsOf(*strongBody);

	const auto covered = [&](const Formula &body)
	{
		for (const auto &conjunct : conjunctsOf(body))
			if (std::find(strongConjuncts.begin(), strongConjuncts.end(), conjunct) == strongConjuncts.end())
				return false;
		return true;
	};

	const auto weakFree = weaker.freeVariables();

	for (const auto &variable : strongVariables)
		if (weakFree.contains(variable))
			return false;

	if (weaker.kind != Formula::Kind::Exists)
		return covered(weaker);

	const auto &weakVariables = weaker.variables;

	if (weakVariables.size() != strongVariables.size() || weakVariables.size() > 4)
		return false;

	std::vector<std::size_t> permutation(weakVariables.size());
	std::iota(permutation.begin(), permutation.end(), 0);

	do
	{
		bool sortsMatch = true;

		for (std::size_t i = 0; i < weakVariables.size(); i++)
			if (weakVariables[i].sort != strongVariables[permutation[i]].sort)
				sortsMatch = false;

		if (!sortsMatch)
			continue;

		// rename through placeholders so that overlapping names do not interfere
		std::set<std::string> taken;
		collectAllVariableNames(weaker, taken);
		collectAllVariableNames(stronger, taken);

		auto body = weaker.body();
		std::vector<Variable> placeholders;

		for (const auto &variable : weakVariables)
		{
			auto placeholder = freshVariable(Variable{variable.name + "_m", variable.sort}, taken);
			taken.insert(placeholder.name);
			body = substitute(body, variable, FoTerm::var(placeholder));
			placeholders.push_back(placeholder);
		}

		for (std::size_t i = 0; i < placeholders.size(); i++)
			body = substitute(body, placeholders[i], FoTerm::var(strongVariables[permutation[i]]));

		if (covered(body))
			return true;
	}
	while (std::next_permutation(permutation.begin(), permutation.end()));

	return false;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Rewriting
//
////////////////////////////////////////////////////////////////////////////////////////////////////

class Simplifier
{
	public:
		explicit Simplifier(const SimplifyOptions &options)
		:	m_options{options}
		{
		}

		Formula run(Formula formula)
		{
			for (std::size_t round = 0; round < 10000; round++)
			{
				auto next = pass(formula);

				if (next == formula)
					break;

				formula = std::move(next);
			}

			return formula;
		}

	private:
		Formula pass(const Formula &formula)
		{
			auto result = formula;

			for (auto &child : result.children)
				child = pass(child);

			for (std::size_t step = 0; step < 1000; step++)
			{
				auto next = rewrite(result);

				if (!next)
					break;

				result = std::move(*next);
			}

			return result;
		}

		std::optional<Formula> rewrite(const Formula &formula)
		{
			switch (formula.kind)
			{
				case Formula::Kind::Comparison:
					return rewriteComparison(formula);
				case Formula::Kind::And:
					return rewriteAnd(formula);
				case Formula::Kind::Or:
					return rewriteOr(formula);
				case Formula::Kind::Implies:
					return rewriteImplies(formula);
				case Formula::Kind::Exists:
					return rewriteExists(formula);
				case Formula::Kind::Forall:
					return rewriteForall(formula);
				default:
					return std::nullopt;
			}
		}

		std::optional<Formula> rewriteComparison(const Formula &formula)
		{
			const auto &left = formula.arguments[0];
			const auto &right = formula.arguments[1];

			std::optional<std::strong_ordering> order;

			if (left == right)
				order = std::strong_ordering::equal;
			else
			{
				const auto a = evaluateGround(left);
				const auto b = evaluateGround(right);

				if (a && b)
					order = precomputedCompare(*a, *b);
			}

			if (!order)
				return std::nullopt;

			return holds(formula.relation, *order) ? Formula::top() : Formula::bottom();
		}

		std::optional<Formula> rewriteAnd(const Formula &formula)
		{
			const auto &children = formula.children;

			for (std::size_t i = 0; i < children.size(); i++)
			{
				const auto &child = children[i];

				if (child.isBottom())
					return Formula::bottom();

				if (child.kind == Formula::Kind::And)
				{
					std::vector<Formula> flattened(children.begin(), children.begin() + i);
					flattened.insert(flattened.end(), child.children.begin(), child.children.end());
					flattened.insert(flattened.end(), children.begin() + i + 1, children.end());
					return Formula::conjunction(std::move(flattened));
				}
			}

			if (children.size() == 1)
				return children.front();

			for (std::size_t i = 0; i < children.size(); i++)
				for (std::size_t j = 0; j < children.size(); j++)
				{
					if (i == j)
						continue;

					if ((children[i] == children[j] && j < i) || (children[i] != children[j] && entails(children[j], children[i])))
					{
						auto remaining = children;
						remaining.erase(remaining.begin() + i);
						return conjunctionOf(std::move(remaining));
					}
				}

			return std::nullopt;
		}

		std::optional<Formula> rewriteOr(const Formula &formula)
		{
			const auto &children = formula.children;

			if (children.empty())
				return Formula::bottom();

			if (children.size() == 1)
				return children.front();

			for (std::size_t i = 0; i < children.size(); i++)
			{
				const auto &child = children[i];

				if (child.isTop())
					return Formula::top();

				if (child.isBottom() || child.kind == Formula::Kind::Or)
				{
					std::vector<Formula> flattened(children.begin(), children.begin() + i);
					if (!child.isBottom())
						flattened.insert(flattened.end(), child.children.begin(), child.children.end());
					flattened.insert(flattened.end(), children.begin() + i + 1, children.end());
					return Formula::disjunction(std::move(flattened));
				}

				for (std::size_t j = 0; j < i; j++)
					if (children[j] == child)
					{
						auto remaining = children;
						remaining.erase(remaining.begin() + i);
						return Formula::disjunction(std::move(remaining));
					}
			}

			return std::nullopt;
		}

		std::optional<Formula> rewriteImplies(const Formula &formula)
		{
			const auto &antecedent = formula.left();
			const auto &consequent = formula.right();

			if (antecedent.isBottom() || consequent.isTop())
				return Formula::top();

			if (antecedent.isTop())
				return consequent;

			if (m_options.eliminateDoubleNegation && consequent.isBottom() && antecedent.isNegation())
				return antecedent.left();

			return std::nullopt;
		}

		// moves exists z out of the given conjuncts into the enclosing quantifier
		std::optional<std::pair<std::vector<Variable>, std::vector<Formula>>> pullExists(const std::vector<Variable> &variables,
			const std::vector<Formula> &conjuncts, const std::vector<const Formula *> &others)
		{
			for (std::size_t i = 0; i < conjuncts.size(); i++)
			{
				if (conjuncts[i].kind != Formula::Kind::Exists)
					continue;

				std::set<Variable> siblingFree;
				for (std::size_t j = 0; j < conjuncts.size(); j++)
					if (j != i)
						siblingFree.merge(conjuncts[j].freeVariables());
				for (const auto *other : others)
					siblingFree.merge(other->freeVariables());

				std::set<std::string> taken;
				for (const auto &conjunct : conjuncts)
					collectAllVariableNames(conjunct, taken);
				for (const auto *other : others)
					collectAllVariableNames(*other, taken);
				for (const auto &variable : variables)
					taken.insert(variable.name);

				auto resultVariables = variables;
				auto body = conjuncts[i].body();

				for (const auto &inner : conjuncts[i].variables)
				{
					auto target = inner;

					if (siblingFree.contains(inner) || hasName(resultVariables, inner.name))
					{
						target = freshVariable(inner, taken);
						taken.insert(target.name);
						body = substitute(body, inner, FoTerm::var(target));
					}

					resultVariables.push_back(target);
				}

				std::vector<Formula> resultConjuncts(conjuncts.begin(), conjuncts.begin() + i);
				for (auto &conjunct : conjunctsOf(body))
					resultConjuncts.push_back(std::move(conjunct));
				resultConjuncts.insert(resultConjuncts.end(), conjuncts.begin() + i + 1, conjuncts.end());

				return std::pair{std::move(resultVariables), std::move(resultConjuncts)};
			}

			return std::nullopt;
		}

		// retypes x to an integer variable
		std::pair<std::vector<Variable>, Formula> narrow(const std::vector<Variable> &variables, const Variable &variable, const Formula &body)
		{
			Variable target{variable.name, Sort::Integer};

			if (occursFree(body, target) || hasName(without(variables, variable), target.name))
			{
				std::set<std::string> taken;
				collectAllVariableNames(body, taken);
				for (const auto &other : variables)
					taken.insert(other.name);
				target = freshVariable(target, taken);
			}

			auto resultVariables = variables;
			std::replace(resultVariables.begin(), resultVariables.end(), variable, target);

			return {std::move(resultVariables), substitute(body, variable, FoTerm::var(target))};
		}

		std::optional<Formula> commonQuantifier(const Formula &formula)
		{
			const auto &body = formula.body();

			if (body.kind == formula.kind)
			{
				bool overlap = false;
				for (const auto &variable : body.variables)
					if (hasName(formula.variables, variable.name))
						overlap = true;

				if (!overlap)
				{
					auto variables = formula.variables;
					variables.insert(variables.end(), body.variables.begin(), body.variables.end());

					auto result = formula;
					result.variables = std::move(variables);
					result.children[0] = body.body();
					return result;
				}
			}

			const auto free = body.freeVariables();
			std::vector<Variable> used;

			for (const auto &variable : formula.variables)
				if (free.contains(variable) && std::find(used.begin(), used.end(), variable) == used.end())
					used.push_back(variable);

			if (used.empty())
				return body;

			if (used.size() != formula.variables.size())
			{
				auto result = formula;
				result.variables = std::move(used);
				return result;
			}

			return std::nullopt;
		}

		std::optional<Formula> rewriteExists(const Formula &formula)
		{
			if (auto result = commonQuantifier(formula))
				return result;

			const auto &body = formula.body();

			if (body.isTop() || body.isBottom())
				return body;

			const auto conjuncts = conjunctsOf(body);

			if (const auto binding = findBinding(conjuncts, formula.variables))
			{
				auto remaining = conjuncts;
				remaining.erase(remaining.begin() + binding->conjunct);

				return Formula::exists(without(formula.variables, binding->variable),
					substitute(conjunctionOf(std::move(remaining)), binding->variable, binding->term));
			}

			if (auto pulled = pullExists(formula.variables, conjuncts, {}))
				return Formula::exists(std::move(pulled->first), conjunctionOf(std::move(pulled->second)));

			for (const auto &variable : formula.variables)
				if (variable.sort == Sort::General && impliesInteger(body, variable))
				{
					auto [variables, narrowed] = narrow(formula.variables, variable, body);
					return Formula::exists(std::move(variables), std::move(narrowed));
				}

			return std::nullopt;
		}

		std::optional<Formula> rewriteForall(const Formula &formula)
		{
			if (auto result = commonQuantifier(formula))
				return result;

			const auto &body = formula.body();

			if (body.isTop() || body.isBottom())
				return body;

			if (body.kind != Formula::Kind::Implies)
				return std::nullopt;

			const auto &antecedent = body.left();
			const auto &consequent = body.right();
			const auto conjuncts = conjunctsOf(antecedent);

			const auto rebuild = [&](std::vector<Variable> variables, Formula newAntecedent, Formula newConsequent)
			{
				auto implication = body;
				implication.children[0] = std::move(newAntecedent);
				implication.children[1] = std::move(newConsequent);
				return Formula::forall(std::move(variables), std::move(implication));
			};

			if (const auto binding = findBinding(conjuncts, formula.variables))
			{
				auto remaining = conjuncts;
				remaining.erase(remaining.begin() + binding->conjunct);

				return rebuild(without(formula.variables, binding->variable),
					substitute(conjunctionOf(std::move(remaining)), binding->variable, binding->term),
					substitute(consequent, binding->variable, binding->term));
			}

			if (auto pulled = pullExists(formula.variables, conjuncts, {&consequent}))
				return rebuild(std::move(pulled->first), conjunctionOf(std::move(pulled->second)), consequent);

			for (const auto &variable : formula.variables)
				if (variable.sort == Sort::General && impliesInteger(antecedent, variable))
				{
					auto [variables, narrowed] = narrow(formula.variables, variable, body);
					return Formula::forall(std::move(variables), std::move(narrowed));
				}

			return std::nullopt;
		}

		SimplifyOptions m_options;
};

}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Entry points
//
////////////////////////////////////////////////////////////////////////////////////////////////////

Formula simplifyFormula(const Formula &formula, const SimplifyOptions &options)
{
	return Simplifier{options}.run(formula);
}

TheoryBundle simplifyBundle(const TheoryBundle &bundle, const SimplifyOptions &options)
{
	auto result = bundle;

	for (auto &section : result.sections)
		for (auto &named : section.formulas)
			named.formula = simplifyFormula(named.formula, options);

	return result;
}

}
