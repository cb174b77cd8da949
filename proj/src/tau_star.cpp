#include <ocomp/tau_star.h>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Fresh variables
//
////////////////////////////////////////////////////////////////////////////////////////////////////

FreshVarSource::FreshVarSource(std::set<std::string> taken)
:	m_taken{std::move(taken)}
{
}

void FreshVarSource::reserve(const std::string &name)
{
	m_taken.insert(name);
}

Variable FreshVarSource::fresh(const std::string &base, Sort sort)
{
	if (m_taken.insert(base).second)
		return Variable{base, sort};

	for (std::size_t i = 1;; i++)
	{
		auto name = base + std::to_string(i);

		if (m_taken.insert(name).second)
			return Variable{std::move(name), sort};
	}
}

std::vector<Variable> FreshVarSource::freshTuple(const std::string &base, std::size_t count, Sort sort)
{
	std::vector<Variable> result;
	std::size_t index = 1;

	while (result.size() < count)
	{
		auto name = base + std::to_string(index++);

		if (m_taken.insert(name).second)
			result.push_back(Variable{std::move(name), sort});
	}

	return result;
}

Variable programVariable(const std::string &name)
{
	return Variable{name, Sort::General};
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// val
//
////////////////////////////////////////////////////////////////////////////////////////////////////

FoTerm toFoTerm(const ProgramTerm &term)
{
	switch (term.kind())
	{
		case ProgramTerm::Kind::Precomputed:
			return FoTerm::constantTerm(term.value());
		case ProgramTerm::Kind::Variable:
			return FoTerm::var(programVariable(term.name()));
		default:
			throw Error("term " + term.toString() + " has no first-order counterpart");
	}
}

namespace
{

FoTerm times(FoTerm left, FoTerm right)
{
	return FoTerm::arithmetic(FoTerm::Kind::Multiply, std::move(left), std::move(right));
}

FoTerm plus(FoTerm left, FoTerm right)
{
	return FoTerm::arithmetic(FoTerm::Kind::Plus, std::move(left), std::move(right));
}

FoTerm minus(FoTerm left, FoTerm right)
{
	return FoTerm::arithmetic(FoTerm::Kind::Minus, std::move(left), std::move(right));
}

FoTerm number(std::int64_t value)
{
	return FoTerm::constantTerm(PrecomputedTerm{value});
}

// K * |J| <= |I| and |I| < (K + 1) * |J|
std::vector<Formula> quotientBounds(const FoTerm &i, const FoTerm &j, const FoTerm &k)
{
	std::vector<Formula> result;
	result.push_back(Formula::compare(Relation::LessEqual, times(k, FoTerm::absolute(j)), FoTerm::absolute(i)));
	result.push_back(Formula::compare(Relation::Less, FoTerm::absolute(i), times(plus(k, number(1)), FoTerm::absolute(j))));
	return result;
}

Formula signCases(const FoTerm &i, const FoTerm &j, Formula nonNegative, Formula negative)
{
	return Formula::disjunction(
		{
			Formula::conjunction({Formula::compare(Relation::GreaterEqual, times(i, j), number(0)), std::move(nonNegative)}),
			Formula::conjunction({Formula::compare(Relation::Less, times(i, j), number(0)), std::move(negative)})
		});
}

}

Formula valFormula(const ProgramTerm &term, const FoTerm &value, FreshVarSource &fresh)
{
	switch (term.kind())
	{
		case ProgramTerm::Kind::Precomputed:
		case ProgramTerm::Kind::Variable:
			return Formula::compare(Relation::Equal, value, toFoTerm(term));
		case ProgramTerm::Kind::Absolute:
		{
			const auto i = fresh.fresh("I", Sort::Integer);
			const auto iTerm = FoTerm::var(i);
			return Formula::exists({i}, Formula::conjunction(
				{
					Formula::compare(Relation::Equal, value, FoTerm::absolute(iTerm)),
					valFormula(term.operand(), iTerm, fresh)
				}));
		}
		case ProgramTerm::Kind::Binary:
			break;
	}

	const auto i = fresh.fresh("I", Sort::Integer);
	const auto j = fresh.fresh("J", Sort::Integer);
	const auto iTerm = FoTerm::var(i);
	const auto jTerm = FoTerm::var(j);

	switch (term.op())
	{
		case BinaryOperator::Plus:
		case BinaryOperator::Minus:
		case BinaryOperator::Multiply:
		{
			const auto kind = term.op() == BinaryOperator::Plus ? FoTerm::Kind::Plus
				: term.op() == BinaryOperator::Minus ? FoTerm::Kind::Minus : FoTerm::Kind::Multiply;

			return Formula::exists({i, j}, Formula::conjunction(
				{
					Formula::compare(Relation::Equal, value, FoTerm::arithmetic(kind, iTerm, jTerm)),
					valFormula(term.left(), iTerm, fresh),
					valFormula(term.right(), jTerm, fresh)
				}));
		}
		default:
			break;
	}

	const auto k = fresh.fresh("K", Sort::Integer);
	const auto kTerm = FoTerm::var(k);

	std::vector<Formula> conjuncts;
	conjuncts.push_back(valFormula(term.left(), iTerm, fresh));
	conjuncts.push_back(valFormula(term.right(), jTerm, fresh));

	switch (term.op())
	{
		case BinaryOperator::Divide:
		{
			for (auto &bound : quotientBounds(iTerm, jTerm, kTerm))
				conjuncts.push_back(std::move(bound));

			conjuncts.push_back(signCases(iTerm, jTerm,
				Formula::compare(Relation::Equal, value, kTerm),
				Formula::compare(Relation::Equal, value, minus(number(0), kTerm))));
			break;
		}
		case BinaryOperator::Modulo:
		{
			for (auto &bound : quotientBounds(iTerm, jTerm, kTerm))
				conjuncts.push_back(std::move(bound));

			conjuncts.push_back(signCases(iTerm, jTerm,
				Formula::compare(Relation::Equal, value, minus(iTerm, times(kTerm, jTerm))),
				Formula::compare(Relation::Equal, value, plus(iTerm, times(kTerm, jTerm)))));
			break;
		}
		default:
			conjuncts.push_back(Formula::compare(Relation::LessEqual, iTerm, kTerm));
			conjuncts.push_back(Formula::compare(Relation::LessEqual, kTerm, jTerm));
			conjuncts.push_back(Formula::compare(Relation::Equal, value, kTerm));
			break;
	}

	return Formula::exists({i, j, k}, Formula::conjunction(std::move(conjuncts)));
}

Formula valTuple(const std::vector<ProgramTerm> &terms, const std::vector<Variable> &values, FreshVarSource &fresh)
{
	if (terms.size() != values.size())
		throw Error("val tuple length mismatch");

	std::vector<Formula> conjuncts;

	for (std::size_t i = 0; i < terms.size(); i++)
		conjuncts.push_back(valFormula(terms[i], FoTerm::var(values[i]), fresh));

	if (conjuncts.size() == 1)
		return std::move(conjuncts.front());

	return Formula::conjunction(std::move(conjuncts));
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Bodies and rules
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

Formula negate(Formula formula, int count)
{
	for (int i = 0; i < count; i++)
		formula = Formula::negation(std::move(formula));
	return formula;
}

}

Formula tauB(const BodyElement &element, FreshVarSource &fresh)
{
	if (const auto *literal = std::get_if<Literal>(&element))
	{
		const auto &arguments = literal->atom.arguments;

		if (arguments.empty())
			return negate(Formula::atom(literal->atom.predicate), literal->negationCount);

		std::vector<Variable> z;
		for (std::size_t i = 0; i < arguments.size(); i++)
			z.push_back(fresh.fresh("Z"));

		auto conjuncts = std::vector<Formula>{};
		for (std::size_t i = 0; i < arguments.size(); i++)
			conjuncts.push_back(valFormula(arguments[i], FoTerm::var(z[i]), fresh));
		conjuncts.push_back(negate(Formula::atom(literal->atom.predicate, asTerms(z)), literal->negationCount));

		return Formula::exists(z, Formula::conjunction(std::move(conjuncts)));
	}

	const auto &comparison = std::get<Comparison>(element);
	const auto z1 = fresh.fresh("Z");
	const auto z2 = fresh.fresh("Z");

	return Formula::exists({z1, z2}, Formula::conjunction(
		{
			valFormula(comparison.left, FoTerm::var(z1), fresh),
			valFormula(comparison.right, FoTerm::var(z2), fresh),
			Formula::compare(comparison.relation, FoTerm::var(z1), FoTerm::var(z2))
		}));
}

Formula tauB(const std::vector<BodyElement> &body, FreshVarSource &fresh)
{
	std::vector<Formula> conjuncts;

	for (const auto &element : body)
		conjuncts.push_back(tauB(element, fresh));

	if (conjuncts.size() == 1)
		return std::move(conjuncts.front());

	return Formula::conjunction(std::move(conjuncts));
}

Formula form(const Rule &rule, const std::vector<Variable> &headVariables, FreshVarSource &fresh)
{
	std::vector<Formula> conjuncts;

	if (rule.headKind != Rule::HeadKind::Constraint)
	{
		const auto &arguments = rule.head.arguments;

		if (arguments.size() != headVariables.size())
			throw Error("head variable count mismatch for " + rule.toString());

		for (std::size_t i = 0; i < arguments.size(); i++)
			conjuncts.push_back(valFormula(arguments[i], FoTerm::var(headVariables[i]), fresh));
	}

	for (const auto &element : rule.body)
		conjuncts.push_back(tauB(element, fresh));

	if (rule.headKind == Rule::HeadKind::Choice)
		conjuncts.push_back(negate(Formula::atom(rule.head.predicate, asTerms(headVariables)), 2));

	if (conjuncts.size() == 1)
		return std::move(conjuncts.front());

	return Formula::conjunction(std::move(conjuncts));
}

Formula tauStarRule(const Rule &rule)
{
	const auto ruleVariables = rule.variables();
	FreshVarSource fresh{ruleVariables};

	std::vector<Variable> closure;

	if (rule.headKind == Rule::HeadKind::Constraint)
	{
		for (const auto &name : ruleVariables)
			closure.push_back(programVariable(name));

		return Formula::forall(closure, Formula::negation(tauB(rule.body, fresh)));
	}

	const auto head = fresh.freshTuple("V", rule.head.arguments.size());
	closure = head;
	for (const auto &name : ruleVariables)
		closure.push_back(programVariable(name));

	auto antecedent = form(rule, head, fresh);
	auto consequent = Formula::atom(rule.head.predicate, asTerms(head));

	return Formula::forall(closure, Formula::implies(std::move(antecedent), std::move(consequent)));
}

std::vector<Formula> tauStarProgram(const Program &program)
{
	program.checkArities();

	std::vector<Formula> result;

	for (const auto &rule : program.rules)
		result.push_back(tauStarRule(rule));

	return result;
}

}
