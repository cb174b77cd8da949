#include <ocomp/ground.h>

#include <algorithm>
#include <cstdint>
#include <functional>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Values
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

template<class Combine>
std::set<PrecomputedTerm> combineNumerals(const ProgramTerm &term, Combine &&combine)
{
	std::set<PrecomputedTerm> result;
	const auto left = values(term.left());
	const auto right = values(term.right());

	for (const auto &a : left)
	{
		if (!a.isNumeral())
			continue;

		for (const auto &b : right)
			if (b.isNumeral())
				combine(a.numeral(), b.numeral(), result);
	}

	return result;
}

}

std::set<PrecomputedTerm> values(const ProgramTerm &term)
{
	switch (term.kind())
	{
		case ProgramTerm::Kind::Precomputed:
			return {term.value()};
		case ProgramTerm::Kind::Variable:
			throw Error("values of non-ground term " + term.toString());
		case ProgramTerm::Kind::Absolute:
		{
			std::set<PrecomputedTerm> result;
			for (const auto &value : values(term.operand()))
				if (value.isNumeral())
					result.insert(checkedAbs(value.numeral()));
			return result;
		}
		case ProgramTerm::Kind::Binary:
			break;
	}

	switch (term.op())
	{
		case BinaryOperator::Plus:
			return combineNumerals(term, [](auto a, auto b, auto &result) { result.insert(checkedAdd(a, b)); });
		case BinaryOperator::Minus:
			return combineNumerals(term, [](auto a, auto b, auto &result) { result.insert(checkedSub(a, b)); });
		case BinaryOperator::Multiply:
			return combineNumerals(term, [](auto a, auto b, auto &result) { result.insert(checkedMul(a, b)); });
		case BinaryOperator::Divide:
			return combineNumerals(term,
				[](auto a, auto b, auto &result)
				{
					if (b != 0)
						result.insert(checkedDiv(a, b));
				});
		case BinaryOperator::Modulo:
			return combineNumerals(term,
				[](auto a, auto b, auto &result)
				{
					if (b != 0)
						result.insert(checkedMod(a, b));
				});
		case BinaryOperator::Interval:
			return combineNumerals(term,
				[](auto a, auto b, auto &result)
				{
					if (a > b)
						return;
					if (checkedSub(b, a) >= MaxIntervalSize)
						throw Error("interval " + std::to_string(a) + ".." + std::to_string(b) + " is too large");
					for (auto value = a; value <= b; value++)
						result.insert(value);
				});
	}

	return {};
}

namespace
{

// all tuples of values of the arguments
std::vector<std::vector<PrecomputedTerm>> valueTuples(const std::vector<ProgramTerm> &arguments)
{
	std::vector<std::vector<PrecomputedTerm>> result(1);

	for (const auto &argument : arguments)
	{
		const auto argumentValues = values(argument);
		std::vector<std::vector<PrecomputedTerm>> extended;
		extended.reserve(result.size() * argumentValues.size());

		for (const auto &prefix : result)
			for (const auto &value : argumentValues)
			{
				auto tuple = prefix;
				tuple.push_back(value);
				extended.push_back(std::move(tuple));
			}

		result = std::move(extended);
	}

	return result;
}

std::vector<GroundAtom> valueAtoms(const Atom &atom)
{
	std::vector<GroundAtom> result;

	for (auto &tuple : valueTuples(atom.arguments))
		result.push_back(GroundAtom{atom.predicate, std::move(tuple)});

	return result;
}

bool comparisonHolds(const Comparison &comparison)
{
	const auto left = values(comparison.left);
	const auto right = values(comparison.right);

	for (const auto &a : left)
		for (const auto &b : right)
			if (holds(comparison.relation, precomputedCompare(a, b)))
				return true;

	return false;
}

bool literalHolds(const Literal &literal, const Interpretation &interpretation)
{
	for (const auto &atom : valueAtoms(literal.atom))
	{
		const bool contained = interpretation.contains(atom);

		if ((literal.negationCount % 2 == 0) == contained)
			return true;
	}

	return false;
}

bool bodyHolds(const std::vector<BodyElement> &body, const Interpretation &interpretation)
{
	for (const auto &element : body)
	{
		if (const auto *literal = std::get_if<Literal>(&element))
		{
			if (!literalHolds(*literal, interpretation))
				return false;
		}
		else if (!comparisonHolds(std::get<Comparison>(element)))
			return false;
	}

	return true;
}

bool headHolds(const Rule &rule, const Interpretation &interpretation)
{
	if (rule.headKind != Rule::HeadKind::Basic)
		return rule.headKind == Rule::HeadKind::Choice;

	const auto atoms = valueAtoms(rule.head);
	return std::all_of(atoms.begin(), atoms.end(), [&](const auto &atom) { return interpretation.contains(atom); });
}

bool ruleHolds(const Rule &rule, const Interpretation &interpretation)
{
	return !bodyHolds(rule.body, interpretation) || headHolds(rule, interpretation);
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Propositional formulas
//
////////////////////////////////////////////////////////////////////////////////////////////////////

PropFormula PropFormula::makeAtom(GroundAtom atom)
{
	PropFormula formula;
	formula.kind = Kind::Atom;
	formula.atom = std::move(atom);
	return formula;
}

PropFormula PropFormula::bottom()
{
	return PropFormula{};
}

PropFormula PropFormula::top()
{
	PropFormula formula;
	formula.kind = Kind::Top;
	return formula;
}

PropFormula PropFormula::conjunction(std::vector<PropFormula> children)
{
	PropFormula formula;
	formula.kind = Kind::And;
	formula.children = std::move(children);
	return formula;
}

PropFormula PropFormula::disjunction(std::vector<PropFormula> children)
{
	PropFormula formula;
	formula.kind = Kind::Or;
	formula.children = std::move(children);
	return formula;
}

PropFormula PropFormula::implies(PropFormula antecedent, PropFormula consequent)
{
	PropFormula formula;
	formula.kind = Kind::Implies;
	formula.children.push_back(std::move(antecedent));
	formula.children.push_back(std::move(consequent));
	return formula;
}

PropFormula PropFormula::negation(PropFormula formula)
{
	return implies(std::move(formula), bottom());
}

std::string PropFormula::toString() const
{
	switch (kind)
	{
		case Kind::Atom:
			return atom.toString();
		case Kind::Bottom:
			return "#false";
		case Kind::Top:
			return "#true";
		case Kind::And:
		case Kind::Or:
		{
			if (children.empty())
				return kind == Kind::And ? "#true" : "#false";

			std::string result = "(";
			for (std::size_t i = 0; i < children.size(); i++)
			{
				if (i > 0)
					result += kind == Kind::And ? " and " : " or ";
				result += children[i].toString();
			}
			return result + ")";
		}
		case Kind::Implies:
			return "(" + children[0].toString() + " -> " + children[1].toString() + ")";
	}

	return "?";
}

bool satisfies(const Interpretation &interpretation, const PropFormula &formula)
{
	switch (formula.kind)
	{
		case PropFormula::Kind::Atom:
			return interpretation.contains(formula.atom);
		case PropFormula::Kind::Bottom:
			return false;
		case PropFormula::Kind::Top:
			return true;
		case PropFormula::Kind::And:
			return std::all_of(formula.children.begin(), formula.children.end(), [&](const auto &child) { return satisfies(interpretation, child); });
		case PropFormula::Kind::Or:
			return std::any_of(formula.children.begin(), formula.children.end(), [&](const auto &child) { return satisfies(interpretation, child); });
		case PropFormula::Kind::Implies:
			return !satisfies(interpretation, formula.children[0]) || satisfies(interpretation, formula.children[1]);
	}

	return false;
}

PropFormula tauGroundBody(const std::vector<BodyElement> &body)
{
	std::vector<PropFormula> conjuncts;

	for (const auto &element : body)
	{
		if (const auto *literal = std::get_if<Literal>(&element))
		{
			std::vector<PropFormula> disjuncts;

			for (auto &atom : valueAtoms(literal->atom))
			{
				auto formula = PropFormula::makeAtom(std::move(atom));
				for (int i = 0; i < literal->negationCount; i++)
					formula = PropFormula::negation(std::move(formula));
				disjuncts.push_back(std::move(formula));
			}

			conjuncts.push_back(PropFormula::disjunction(std::move(disjuncts)));
		}
		else
			conjuncts.push_back(comparisonHolds(std::get<Comparison>(element)) ? PropFormula::top() : PropFormula::bottom());
	}

	return PropFormula::conjunction(std::move(conjuncts));
}

PropFormula tauGroundRule(const Rule &rule)
{
	auto body = tauGroundBody(rule.body);

	switch (rule.headKind)
	{
		case Rule::HeadKind::Basic:
		{
			std::vector<PropFormula> head;
			for (auto &atom : valueAtoms(rule.head))
				head.push_back(PropFormula::makeAtom(std::move(atom)));
			return PropFormula::implies(std::move(body), PropFormula::conjunction(std::move(head)));
		}
		case Rule::HeadKind::Choice:
		{
			std::vector<PropFormula> head;
			for (auto &atom : valueAtoms(rule.head))
			{
				auto positive = PropFormula::makeAtom(std::move(atom));
				auto negative = PropFormula::negation(positive);
				head.push_back(PropFormula::disjunction({std::move(positive), std::move(negative)}));
			}
			return PropFormula::implies(std::move(body), PropFormula::conjunction(std::move(head)));
		}
		case Rule::HeadKind::Constraint:
			return PropFormula::negation(std::move(body));
	}

	return PropFormula::bottom();
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Instantiation
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

Atom substituteAtom(const Atom &atom, const std::string &variable, const PrecomputedTerm &value)
{
	Atom result{atom.predicate, {}};

	for (const auto &argument : atom.arguments)
		result.arguments.push_back(argument.substitute(variable, value));

	return result;
}

}

Rule substituteRule(const Rule &rule, const std::string &variable, const PrecomputedTerm &value)
{
	Rule result;
	result.headKind = rule.headKind;

	if (rule.headKind != Rule::HeadKind::Constraint)
		result.head = substituteAtom(rule.head, variable, value);

	for (const auto &element : rule.body)
	{
		if (const auto *literal = std::get_if<Literal>(&element))
			result.body.push_back(Literal{literal->negationCount, substituteAtom(literal->atom, variable, value)});
		else
		{
			const auto &comparison = std::get<Comparison>(element);
			result.body.push_back(Comparison{comparison.relation, comparison.left.substitute(variable, value), comparison.right.substitute(variable, value)});
		}
	}

	return result;
}

std::vector<Rule> instantiate(const Rule &rule, const Domain &domain)
{
	std::vector<Rule> result{rule};

	for (const auto &variable : rule.variables())
	{
		std::vector<Rule> next;
		next.reserve(result.size() * domain.general.size());

		for (const auto &partial : result)
			for (const auto &value : domain.general)
				next.push_back(substituteRule(partial, variable, value));

		result = std::move(next);
	}

	return result;
}

std::vector<Rule> instantiate(const Program &program, const Domain &domain)
{
	std::vector<Rule> result;

	for (const auto &rule : program.rules)
	{
		auto instances = instantiate(rule, domain);
		result.insert(result.end(), std::make_move_iterator(instances.begin()), std::make_move_iterator(instances.end()));
	}

	return result;
}

Domain defaultDomain(const Program &program, std::int64_t radius)
{
	Domain domain;
	std::optional<std::int64_t> low;
	std::optional<std::int64_t> high;

	const std::function<void(const ProgramTerm &)> visit =
		[&](const ProgramTerm &term)
		{
			switch (term.kind())
			{
				case ProgramTerm::Kind::Precomputed:
					if (term.value().isNumeral())
					{
						const auto value = term.value().numeral();
						low = low ? std::min(*low, value) : value;
						high = high ? std::max(*high, value) : value;
					}
					else
						domain.general.insert(term.value());
					return;
				case ProgramTerm::Kind::Variable:
					return;
				case ProgramTerm::Kind::Absolute:
					visit(term.operand());
					return;
				case ProgramTerm::Kind::Binary:
					visit(term.left());
					visit(term.right());
					return;
			}
		};

	const auto visitAtom =
		[&](const Atom &atom)
		{
			for (const auto &argument : atom.arguments)
				visit(argument);
		};

	for (const auto &rule : program.rules)
	{
		if (rule.headKind != Rule::HeadKind::Constraint)
			visitAtom(rule.head);

		for (const auto &element : rule.body)
		{
			if (const auto *literal = std::get_if<Literal>(&element))
				visitAtom(literal->atom);
			else
			{
				visit(std::get<Comparison>(element).left);
				visit(std::get<Comparison>(element).right);
			}
		}
	}

	if (!low && domain.general.empty())
	{
		low = 0;
		high = 0;
	}

	if (low)
		for (auto value = checkedSub(*low, radius); value <= checkedAdd(*high, radius); value++)
			domain.general.insert(value);

	return domain;
}

std::vector<GroundAtom> herbrandAtoms(const std::vector<Predicate> &predicates, const Domain &domain)
{
	std::vector<GroundAtom> result;

	for (const auto &predicate : predicates)
	{
		std::vector<std::vector<PrecomputedTerm>> tuples(1);

		for (std::size_t i = 0; i < predicate.arity; i++)
		{
			std::vector<std::vector<PrecomputedTerm>> extended;
			for (const auto &prefix : tuples)
				for (const auto &value : domain.general)
				{
					auto tuple = prefix;
					tuple.push_back(value);
					extended.push_back(std::move(tuple));
				}
			tuples = std::move(extended);
		}

		for (auto &tuple : tuples)
			result.push_back(GroundAtom{predicate.name, std::move(tuple)});
	}

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Reducts
//
////////////////////////////////////////////////////////////////////////////////////////////////////

PropFormula reduct(const PropFormula &formula, const Interpretation &interpretation)
{
	if (!satisfies(interpretation, formula))
		return PropFormula::bottom();

	switch (formula.kind)
	{
		case PropFormula::Kind::Atom:
		case PropFormula::Kind::Top:
		case PropFormula::Kind::Bottom:
			return formula;
		default:
		{
			auto result = formula;
			for (auto &child : result.children)
				child = reduct(child, interpretation);
			return result;
		}
	}
}

std::string ReductClause::toString() const
{
	std::string result;

	for (std::size_t i = 0; i < body.size(); i++)
	{
		if (i > 0)
			result += " and ";

		if (body[i].size() != 1)
			result += "(";
		for (std::size_t j = 0; j < body[i].size(); j++)
			result += (j > 0 ? " or " : "") + body[i][j].toString();
		if (body[i].size() != 1)
			result += ")";
	}

	if (body.empty())
		result += "#true";

	result += " -> ";

	for (std::size_t i = 0; i < head.size(); i++)
		result += (i > 0 ? " and " : "") + head[i].toString();

	if (head.empty())
		result += "#true";

	return result;
}

std::variant<std::optional<ReductClause>, UnsatisfiedMarker> normalizeReduct(const Rule &groundRule, const Interpretation &interpretation)
{
	const bool body = bodyHolds(groundRule.body, interpretation);

	if (groundRule.headKind == Rule::HeadKind::Constraint)
	{
		if (body)
			return UnsatisfiedMarker{};
		return std::optional<ReductClause>{};
	}

	if (!body)
		return std::optional<ReductClause>{};

	ReductClause clause;

	for (auto &atom : valueAtoms(groundRule.head))
	{
		const bool contained = interpretation.contains(atom);

		if (groundRule.headKind == Rule::HeadKind::Basic && !contained)
			return UnsatisfiedMarker{};

		if (contained)
			clause.head.push_back(std::move(atom));
	}

	if (clause.head.empty())
		return std::optional<ReductClause>{};

	for (const auto &literal : groundRule.positiveBody())
	{
		std::vector<GroundAtom> disjunction;

		for (auto &atom : valueAtoms(literal.atom))
			if (interpretation.contains(atom))
				disjunction.push_back(std::move(atom));

		clause.body.push_back(std::move(disjunction));
	}

	return std::optional<ReductClause>{std::move(clause)};
}

NormalizedReduct normalizeReduct(const std::vector<Rule> &groundRules, const Interpretation &interpretation)
{
	ReductTheory theory;

	for (const auto &rule : groundRules)
	{
		auto result = normalizeReduct(rule, interpretation);

		if (std::holds_alternative<UnsatisfiedMarker>(result))
			return UnsatisfiedMarker{};

		if (auto &clause = std::get<std::optional<ReductClause>>(result))
			theory.insert(std::move(*clause));
	}

	return theory;
}

NormalizedReduct normalizeReduct(const Program &program, const Interpretation &interpretation, const Domain &domain)
{
	return normalizeReduct(instantiate(program, domain), interpretation);
}

Interpretation immediateConsequences(const ReductTheory &theory, const Interpretation &interpretation)
{
	Interpretation result;

	for (const auto &clause : theory)
	{
		const bool fires = std::all_of(clause.body.begin(), clause.body.end(),
			[&](const auto &disjunction)
			{
				return std::any_of(disjunction.begin(), disjunction.end(), [&](const auto &atom) { return interpretation.contains(atom); });
			});

		if (fires)
			result.insert(clause.head.begin(), clause.head.end());
	}

	return result;
}

Interpretation minimalModel(const ReductTheory &theory)
{
	Interpretation current;

	while (true)
	{
		auto next = immediateConsequences(theory, current);

		if (next == current)
			return current;

		current = std::move(next);
	}
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Model checks
//
////////////////////////////////////////////////////////////////////////////////////////////////////

bool satisfiesProgram(const std::vector<Rule> &groundRules, const Interpretation &interpretation)
{
	return std::all_of(groundRules.begin(), groundRules.end(), [&](const auto &rule) { return ruleHolds(rule, interpretation); });
}

bool isStable(const std::vector<Rule> &groundRules, const Interpretation &interpretation)
{
	const auto normalized = normalizeReduct(groundRules, interpretation);

	if (std::holds_alternative<UnsatisfiedMarker>(normalized))
		return false;

	if (!satisfiesProgram(groundRules, interpretation))
		return false;

	return minimalModel(std::get<ReductTheory>(normalized)) == interpretation;
}

bool isStable(const Program &program, const Interpretation &interpretation, const Domain &domain)
{
	return isStable(instantiate(program, domain), interpretation);
}

bool isSupported(const std::vector<Rule> &groundRules, const Interpretation &interpretation)
{
	if (!satisfiesProgram(groundRules, interpretation))
		return false;

	std::set<GroundAtom> supported;

	for (const auto &rule : groundRules)
	{
		if (rule.headKind == Rule::HeadKind::Constraint || !bodyHolds(rule.body, interpretation))
			continue;

		for (auto &atom : valueAtoms(rule.head))
			if (interpretation.contains(atom))
				supported.insert(std::move(atom));
	}

	return supported.size() == interpretation.size();
}

bool isSupported(const Program &program, const Interpretation &interpretation, const Domain &domain)
{
	return isSupported(instantiate(program, domain), interpretation);
}

namespace
{

// positive body literals each have a value atom accepted by the predicate
template<class Accept>
bool positiveBodyWitnessed(const Rule &rule, Accept &&accept)
{
	for (const auto &literal : rule.positiveBody())
	{
		const auto atoms = valueAtoms(literal.atom);
		if (!std::any_of(atoms.begin(), atoms.end(), accept))
			return false;
	}

	return true;
}

}

WellSupport wellSupport(const std::vector<Rule> &groundRules, const Interpretation &interpretation)
{
	WellSupport result;

	if (!satisfiesProgram(groundRules, interpretation))
		return result;

	// rules whose body holds, with their head atoms in I
	std::vector<std::pair<const Rule *, std::vector<GroundAtom>>> supporting;

	for (const auto &rule : groundRules)
	{
		if (rule.headKind == Rule::HeadKind::Constraint || !bodyHolds(rule.body, interpretation))
			continue;

		std::vector<GroundAtom> heads;
		for (auto &atom : valueAtoms(rule.head))
			if (interpretation.contains(atom))
				heads.push_back(std::move(atom));

		if (!heads.empty())
			supporting.emplace_back(&rule, std::move(heads));
	}

	for (std::size_t layer = 1; result.rank.size() < interpretation.size(); layer++)
	{
		std::vector<GroundAtom> added;

		for (const auto &[rule, heads] : supporting)
		{
			const bool witnessed = positiveBodyWitnessed(*rule,
				[&](const GroundAtom &atom)
				{
					return result.rank.contains(atom);
				});

			if (!witnessed)
				continue;

			for (const auto &atom : heads)
				if (!result.rank.contains(atom))
					added.push_back(atom);
		}

		if (added.empty())
			break;

		for (auto &atom : added)
			result.rank.emplace(std::move(atom), layer);
	}

	result.wellSupported = result.rank.size() == interpretation.size();
	return result;
}

bool isWellSupported(const std::vector<Rule> &groundRules, const Interpretation &interpretation)
{
	return wellSupport(groundRules, interpretation).wellSupported;
}

bool isWellSupported(const Program &program, const Interpretation &interpretation, const Domain &domain)
{
	return isWellSupported(instantiate(program, domain), interpretation);
}

bool witnessesWellSupport(const std::vector<Rule> &groundRules, const Interpretation &interpretation, const DerivationOrder &order)
{
	if (!satisfiesProgram(groundRules, interpretation))
		return false;

	for (const auto &[a, b] : order)
	{
		if (a == b || !interpretation.contains(a) || !interpretation.contains(b))
			return false;

		for (const auto &[c, d] : order)
			if (b == c && !order.contains({a, d}))
				return false;
	}

	for (const auto &atom : interpretation)
	{
		bool supported = false;

		for (const auto &rule : groundRules)
		{
			if (rule.headKind == Rule::HeadKind::Constraint)
				continue;

			const auto heads = valueAtoms(rule.head);
			if (std::find(heads.begin(), heads.end(), atom) == heads.end() || !bodyHolds(rule.body, interpretation))
				continue;

			const bool witnessed = positiveBodyWitnessed(rule,
				[&](const GroundAtom &witness)
				{
					return interpretation.contains(witness) && order.contains({witness, atom});
				});

			if (witnessed)
			{
				supported = true;
				break;
			}
		}

		if (!supported)
			return false;
	}

	return true;
}

namespace
{

// strict partial orders on 0..n-1, bit i * n + j meaning i < j
const std::vector<std::uint32_t> &indexOrders(std::size_t n)
{
	static std::vector<std::uint32_t> cache[6];
	static bool filled[6] = {};

	if (filled[n])
		return cache[n];

	std::vector<std::pair<std::size_t, std::size_t>> pairs;
	for (std::size_t i = 0; i < n; i++)
		for (std::size_t j = 0; j < n; j++)
			if (i != j)
				pairs.emplace_back(i, j);

	const auto bit = [n](std::size_t i, std::size_t j) { return std::uint32_t{1} << (i * n + j); };

	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); mask++)
	{
		std::uint32_t relation = 0;
		for (std::size_t k = 0; k < pairs.size(); k++)
			if (mask & (std::uint64_t{1} << k))
				relation |= bit(pairs[k].first, pairs[k].second);

		bool valid = true;
		for (std::size_t i = 0; i < n && valid; i++)
			for (std::size_t j = 0; j < n && valid; j++)
			{
				if (!(relation & bit(i, j)))
					continue;
				if (relation & bit(j, i))
					valid = false;
				for (std::size_t k = 0; k < n && valid; k++)
					if ((relation & bit(j, k)) && !(relation & bit(i, k)))
						valid = false;
			}

		if (valid)
			cache[n].push_back(relation);
	}

	filled[n] = true;
	return cache[n];
}

}

std::vector<DerivationOrder> strictPartialOrders(const Interpretation &interpretation)
{
	const std::vector<GroundAtom> atoms(interpretation.begin(), interpretation.end());
	const auto n = atoms.size();

	if (n > 5)
		throw Error("strict partial order enumeration limited to 5 atoms");

	std::vector<DerivationOrder> result;

	for (const auto relation : indexOrders(n))
	{
		DerivationOrder order;
		for (std::size_t i = 0; i < n; i++)
			for (std::size_t j = 0; j < n; j++)
				if (relation & (std::uint32_t{1} << (i * n + j)))
					order.emplace(atoms[i], atoms[j]);

		result.push_back(std::move(order));
	}

	return result;
}

bool isWellSupportedExhaustive(const std::vector<Rule> &groundRules, const Interpretation &interpretation)
{
	if (interpretation.size() > 4)
		throw Error("exhaustive well-support check limited to 4 atoms");

	if (!satisfiesProgram(groundRules, interpretation))
		return false;

	const std::vector<GroundAtom> atoms(interpretation.begin(), interpretation.end());
	const auto n = atoms.size();

	const auto index = [&](const GroundAtom &atom) -> std::size_t
	{
		return static_cast<std::size_t>(std::find(atoms.begin(), atoms.end(), atom) - atoms.begin());
	};

	// per atom, the supporting rules as masks of admissible witnesses, one per positive literal
	std::vector<std::vector<std::vector<std::uint32_t>>> supports(n);

	for (const auto &rule : groundRules)
	{
		if (rule.headKind == Rule::HeadKind::Constraint || !bodyHolds(rule.body, interpretation))
			continue;

		std::vector<std::uint32_t> witnesses;
		for (const auto &literal : rule.positiveBody())
		{
			std::uint32_t mask = 0;
			for (const auto &atom : valueAtoms(literal.atom))
				if (const auto i = index(atom); i < n)
					mask |= std::uint32_t{1} << i;
			witnesses.push_back(mask);
		}

		for (const auto &atom : valueAtoms(rule.head))
			if (const auto i = index(atom); i < n)
				supports[i].push_back(witnesses);
	}

	for (const auto relation : indexOrders(n))
	{
		bool witnessed = true;

		for (std::size_t target = 0; target < n && witnessed; target++)
		{
			std::uint32_t below = 0;
			for (std::size_t i = 0; i < n; i++)
				if (relation & (std::uint32_t{1} << (i * n + target)))
					below |= std::uint32_t{1} << i;

			witnessed = std::any_of(supports[target].begin(), supports[target].end(),
				[&](const auto &witnesses)
				{
					return std::all_of(witnesses.begin(), witnesses.end(), [&](const auto mask) { return (mask & below) != 0; });
				});
		}

		if (witnessed)
			return true;
	}

	return false;
}

std::vector<Interpretation> stableModels(const Program &program, const Domain &domain)
{
	const auto groundRules = instantiate(program, domain);
	std::set<GroundAtom> candidateSet;

	for (const auto &rule : groundRules)
		if (rule.headKind != Rule::HeadKind::Constraint)
			for (auto &atom : valueAtoms(rule.head))
				candidateSet.insert(std::move(atom));

	const std::vector<GroundAtom> candidates(candidateSet.begin(), candidateSet.end());

	if (candidates.size() > 24)
		throw Error("too many candidate atoms for stable model enumeration: " + std::to_string(candidates.size()));

	std::vector<Interpretation> result;

	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); mask++)
	{
		Interpretation interpretation;
		for (std::size_t i = 0; i < candidates.size(); i++)
			if (mask & (std::uint64_t{1} << i))
				interpretation.insert(candidates[i]);

		if (isStable(groundRules, interpretation))
			result.push_back(std::move(interpretation));
	}

	std::sort(result.begin(), result.end());
	return result;
}

}
