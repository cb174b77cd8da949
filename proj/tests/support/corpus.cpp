#include "corpus.h"

#include <algorithm>
#include <functional>

namespace ocomp::testing
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Exhaustive corpus
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::vector<CorpusSignature> corpusSignatures()
{
	return {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
}

namespace
{

std::string atomText(const std::string &predicate, std::size_t arity, const std::string &argument)
{
	return arity == 0 ? predicate : predicate + "(" + argument + ")";
}

Rule parseRule(const std::string &text)
{
	auto program = parseProgram(text);
	return program.rules.front();
}

}

std::vector<Rule> corpusRules(const CorpusSignature &signature)
{
	const std::vector<std::pair<std::string, std::size_t>> predicates{{"p", signature.pArity}, {"q", signature.qArity}};

	std::vector<std::string> heads;
	for (const auto &[name, arity] : predicates)
	{
		heads.push_back(atomText(name, arity, "X"));
		if (arity > 0)
			heads.push_back(atomText(name, arity, "1"));
	}

	struct Element
	{
		std::string text;
		bool negated;
		bool binds;
	};

	std::vector<Element> elements;
	for (const auto &[name, arity] : predicates)
		for (const bool negated : {false, true})
			elements.push_back({(negated ? "not " : "") + atomText(name, arity, "X"), negated, arity > 0 && !negated});

	std::vector<std::vector<Element>> bodies{{}};
	for (std::size_t i = 0; i < elements.size(); i++)
	{
		bodies.push_back({elements[i]});

		for (std::size_t j = i + 1; j < elements.size(); j++)
			if (!(elements[i].negated && elements[j].negated))
				bodies.push_back({elements[i], elements[j]});
	}

	std::vector<Rule> result;

	const auto add = [&](const std::string &head, bool headUsesX, const std::vector<Element> &body)
	{
		bool usesX = headUsesX;
		bool bound = false;
		std::string text = head;

		for (std::size_t i = 0; i < body.size(); i++)
		{
			text += (i == 0 ? " :- " : ", ") + body[i].text;
			usesX = usesX || body[i].text.find('X') != std::string::npos;
			bound = bound || body[i].binds;
		}

		if (usesX && !bound)
			return;

		if (head.empty() && body.empty())
			return;

		if (head.empty())
			text = ":- " + text.substr(4);

		result.push_back(parseRule(text + "."));
	};

	for (const auto &body : bodies)
	{
		for (const auto &head : heads)
		{
			const bool usesX = head.find('X') != std::string::npos;
			add(head, usesX, body);
			add("{" + head + "}", usesX, body);
		}

		add("", false, body);
	}

	return result;
}

std::vector<Program> corpusPrograms(const CorpusSignature &signature, std::size_t maxRules)
{
	const auto rules = corpusRules(signature);
	std::vector<Program> result{Program{}};

	const std::function<void(std::size_t, Program &)> extend = [&](std::size_t first, Program &program)
	{
		if (program.rules.size() == maxRules)
			return;

		for (std::size_t i = first; i < rules.size(); i++)
		{
			program.rules.push_back(rules[i]);
			result.push_back(program);
			extend(i + 1, program);
			program.rules.pop_back();
		}
	};

	Program program;
	extend(0, program);
	return result;
}

Domain corpusDomain()
{
	return Domain{{PrecomputedTerm{1}, PrecomputedTerm{2}}};
}

std::vector<Interpretation> allInterpretations(const std::vector<Predicate> &predicates, const Domain &domain)
{
	const auto atoms = herbrandAtoms(predicates, domain);
	std::vector<Interpretation> result;

	if (atoms.size() > 20)
		throw Error("too many atoms");

	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); mask++)
	{
		Interpretation interpretation;
		for (std::size_t i = 0; i < atoms.size(); i++)
			if (mask & (std::uint64_t{1} << i))
				interpretation.insert(atoms[i]);
		result.push_back(std::move(interpretation));
	}

	return result;
}

Interpretation orderFacts(const DerivationOrder &order)
{
	Interpretation result;

	for (const auto &[smaller, larger] : order)
	{
		GroundAtom fact{orderPredicateName(smaller.predicate, larger.predicate), smaller.arguments};
		fact.arguments.insert(fact.arguments.end(), larger.arguments.begin(), larger.arguments.end());
		result.insert(std::move(fact));
	}

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Ordered completion checks
//
////////////////////////////////////////////////////////////////////////////////////////////////////

Formula sectionConjunction(const TheoryBundle &bundle, const std::vector<std::string> &names)
{
	std::vector<Formula> conjuncts;

	for (const auto &name : names)
		if (const auto *section = bundle.findSection(name))
			for (const auto &named : section->formulas)
				conjuncts.push_back(named.formula);

	return Formula::conjunction(std::move(conjuncts));
}

namespace
{

TheoryBundle completeOc(const Program &program, OrderVariant variant)
{
	OcConfig config;
	config.variant = variant;
	config.completeUndefined = true;
	return orderedCompletion(program, config);
}

}

OcChecker::OcChecker(const Program &program, OrderVariant variant, Domain domain)
:	OcChecker{completeOc(program, variant), variant, std::move(domain)}
{
}

OcChecker::OcChecker(const TheoryBundle &bundle, OrderVariant variant, Domain domain)
:	m_variant{variant},
	m_domain{std::move(domain)},
	m_base{sectionConjunction(bundle, {"constraints", "rules"})},
	m_axioms{sectionConjunction(bundle, {"axioms"})},
	m_definitions{sectionConjunction(bundle, {"definitions"})}
{
}

bool OcChecker::satisfiesBase(const Interpretation &interpretation) const
{
	Extras extras;
	extras.generalDomain = m_domain.general;
	return m_base.evaluate(extendStandard(interpretation, SignatureExt::Sigma0, std::move(extras)));
}

bool OcChecker::satisfiesWith(const Interpretation &interpretation, const Interpretation &orderFacts) const
{
	Extras extras;
	extras.generalDomain = m_domain.general;
	extras.orderFacts = orderFacts;
	const auto model = extendStandard(interpretation, SignatureExt::SigmaOrder, std::move(extras));
	return m_definitions.evaluate(model) && m_axioms.evaluate(model);
}

bool OcChecker::satisfiesWith(const Interpretation &interpretation, const std::map<GroundAtom, std::int64_t> &levels) const
{
	Extras extras;
	extras.generalDomain = m_domain.general;
	extras.levelMap = levels;
	const auto model = extendStandard(interpretation, SignatureExt::SigmaLevel, std::move(extras));
	return m_definitions.evaluate(model) && m_axioms.evaluate(model);
}

bool OcChecker::admits(const Interpretation &interpretation) const
{
	if (!satisfiesBase(interpretation))
		return false;

	if (m_variant == OrderVariant::OrderPredicates)
	{
		for (const auto &order : strictPartialOrders(interpretation))
			if (satisfiesWith(interpretation, orderFacts(order)))
				return true;

		return false;
	}

	const std::vector<GroundAtom> atoms{interpretation.begin(), interpretation.end()};
	const auto bound = static_cast<std::int64_t>(std::max<std::size_t>(atoms.size(), 1));
	std::vector<std::int64_t> levels(atoms.size(), 0);

	while (true)
	{
		std::map<GroundAtom, std::int64_t> levelMap;
		for (std::size_t i = 0; i < atoms.size(); i++)
			levelMap[atoms[i]] = levels[i];

		if (satisfiesWith(interpretation, levelMap))
			return true;

		std::size_t position = 0;
		while (position < levels.size() && ++levels[position] == bound)
			levels[position++] = 0;

		if (position == levels.size())
			return false;
	}
}

bool OcChecker::admitsLinear(const Interpretation &interpretation) const
{
	if (!satisfiesBase(interpretation))
		return false;

	std::vector<GroundAtom> atoms{interpretation.begin(), interpretation.end()};

	do
	{
		DerivationOrder order;
		for (std::size_t i = 0; i < atoms.size(); i++)
			for (std::size_t j = i + 1; j < atoms.size(); j++)
				order.emplace(atoms[i], atoms[j]);

		if (m_variant == OrderVariant::OrderPredicates)
		{
			if (satisfiesWith(interpretation, orderFacts(order)))
				return true;
		}
		else
		{
			std::map<GroundAtom, std::int64_t> levelMap;
			for (std::size_t i = 0; i < atoms.size(); i++)
				levelMap[atoms[i]] = static_cast<std::int64_t>(i);

			if (satisfiesWith(interpretation, levelMap))
				return true;
		}
	}
	while (std::next_permutation(atoms.begin(), atoms.end()));

	return false;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Random programs
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

template<class T>
const T &pick(Random &random, const std::vector<T> &items)
{
	return items[std::uniform_int_distribution<std::size_t>{0, items.size() - 1}(random)];
}

bool chance(Random &random, double probability)
{
	return std::bernoulli_distribution{probability}(random);
}

}

ProgramTerm randomGroundTerm(Random &random, std::size_t depth)
{
	const auto choice = std::uniform_int_distribution<int>{0, depth == 0 ? 2 : 9}(random);

	if (choice <= 1)
		return ProgramTerm::precomputed(PrecomputedTerm{std::uniform_int_distribution<std::int64_t>{-3, 3}(random)});
	if (choice == 2)
		return ProgramTerm::precomputed(chance(random, 0.5) ? PrecomputedTerm::symbol("a") : PrecomputedTerm{Infimum{}});
	if (choice == 3)
		return ProgramTerm::absolute(randomGroundTerm(random, depth - 1));

	const std::vector<BinaryOperator> operators{BinaryOperator::Plus, BinaryOperator::Minus, BinaryOperator::Multiply,
		BinaryOperator::Divide, BinaryOperator::Modulo, BinaryOperator::Interval};

	return ProgramTerm::binary(pick(random, operators), randomGroundTerm(random, depth - 1), randomGroundTerm(random, depth - 1));
}

Program randomProgram(Random &random, std::size_t maxRules)
{
	// every term value in a head stays within -1..2 once the guard holds
	const std::vector<std::pair<std::string, std::string>> headTerms{
		{"X", ""}, {"0", ""}, {"1", ""}, {"a", ""}, {"0..1", ""}, {"X/2", ""}, {"X\\2", ""},
		{"X+1", "X < 2"}, {"X-1", "X > -1"}, {"|X|", ""}, {"-X", "X < 2"}, {"Y", ""}};
	const std::vector<std::string> positiveTerms{"X", "Y", "0", "1", "a", "X+1", "X-1", "X*Y", "X/2", "X\\2", "|X|", "0..1", "-X", "X..Y"};
	const std::vector<std::string> plainTerms{"X", "Y", "0", "1", "a"};
	const std::vector<std::string> relations{"=", "!=", "<", ">", "<=", ">="};
	const std::vector<std::string> predicates{"p", "q", "r"};

	const auto atom = [&](const std::string &predicate, const std::string &term)
	{
		return predicate == "r" ? predicate : predicate + "(" + term + ")";
	};

	std::string text;
	const auto count = std::uniform_int_distribution<std::size_t>{1, maxRules}(random);

	for (std::size_t i = 0; i < count; i++)
	{
		std::vector<std::string> body;
		std::string head;

		const auto kind = std::uniform_int_distribution<int>{0, 9}(random);

		if (kind < 8)
		{
			const auto &[term, guard] = pick(random, headTerms);
			head = atom(pick(random, predicates), term);
			if (kind >= 6)
				head = "{" + head + "}";
			if (!guard.empty())
				body.push_back(guard);
		}

		const auto elements = std::uniform_int_distribution<std::size_t>{0, 3}(random);

		for (std::size_t j = 0; j < elements; j++)
		{
			const auto choice = std::uniform_int_distribution<int>{0, 5}(random);

			if (choice < 3)
				body.push_back(atom(pick(random, predicates), pick(random, positiveTerms)));
			else if (choice == 3)
				body.push_back("not " + atom(pick(random, predicates), pick(random, plainTerms)));
			else if (choice == 4)
				body.push_back("not not " + atom(pick(random, predicates), pick(random, plainTerms)));
			else
				body.push_back(pick(random, plainTerms) + " " + pick(random, relations) + " " + pick(random, plainTerms));
		}

		if (head.empty() && body.empty())
			body.push_back("r");

		text += head;
		for (std::size_t j = 0; j < body.size(); j++)
			text += (j == 0 ? " :- " : ", ") + body[j];
		text += ".\n";
	}

	return parseProgram(text);
}

Interpretation randomInterpretation(Random &random, const std::vector<Predicate> &predicates, const Domain &domain)
{
	Interpretation result;
	const auto density = std::uniform_real_distribution<double>{0.1, 0.9}(random);

	for (const auto &atom : herbrandAtoms(predicates, domain))
		if (chance(random, density))
			result.insert(atom);

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Random formulas
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

FoTerm randomTerm(Random &random, const std::vector<Variable> &scope, bool integer)
{
	std::vector<Variable> candidates;
	for (const auto &variable : scope)
		if (!integer || variable.sort == Sort::Integer)
			candidates.push_back(variable);

	const auto choice = std::uniform_int_distribution<int>{0, 5}(random);

	if (choice < 3 && !candidates.empty())
		return FoTerm::var(pick(random, candidates));

	if (choice == 3 && !candidates.empty())
	{
		const auto operand = randomTerm(random, scope, true);
		if (operand.isIntegerSorted())
			return FoTerm::absolute(operand);
	}

	if (!integer && choice == 4)
		return FoTerm::constantTerm(PrecomputedTerm::symbol(chance(random, 0.5) ? "a" : "b"));

	return FoTerm::constantTerm(PrecomputedTerm{std::uniform_int_distribution<std::int64_t>{-1, 2}(random)});
}

Formula randomFormulaIn(Random &random, std::vector<Variable> &scope, std::size_t depth)
{
	const auto leaf = depth == 0 || chance(random, 0.2);

	if (leaf)
	{
		const auto choice = std::uniform_int_distribution<int>{0, 9}(random);

		if (choice < 4)
			return Formula::atom(chance(random, 0.5) ? "p" : "q", {randomTerm(random, scope, false)});
		if (choice == 4)
			return Formula::atom("r");
		if (choice == 5)
			return chance(random, 0.5) ? Formula::top() : Formula::bottom();

		const std::vector<Relation> relations{Relation::Equal, Relation::Equal, Relation::NotEqual, Relation::Less, Relation::LessEqual, Relation::Greater};
		return Formula::compare(pick(random, relations), randomTerm(random, scope, false), randomTerm(random, scope, false));
	}

	const auto choice = std::uniform_int_distribution<int>{0, 6}(random);

	switch (choice)
	{
		case 0:
		case 1:
		{
			std::vector<Formula> children;
			const auto count = std::uniform_int_distribution<std::size_t>{1, 3}(random);
			for (std::size_t i = 0; i < count; i++)
				children.push_back(randomFormulaIn(random, scope, depth - 1));
			return choice == 0 ? Formula::conjunction(std::move(children)) : Formula::disjunction(std::move(children));
		}
		case 2:
			return Formula::implies(randomFormulaIn(random, scope, depth - 1), randomFormulaIn(random, scope, depth - 1));
		case 3:
			return Formula::negation(randomFormulaIn(random, scope, depth - 1));
		default:
		{
			const std::vector<std::string> names{"X", "Y", "Z", "I"};
			std::vector<Variable> variables;
			const auto count = std::uniform_int_distribution<std::size_t>{1, 2}(random);

			for (std::size_t i = 0; i < count; i++)
			{
				Variable variable{pick(random, names), chance(random, 0.4) ? Sort::Integer : Sort::General};
				if (std::find(variables.begin(), variables.end(), variable) == variables.end())
					variables.push_back(variable);
			}

			const auto size = scope.size();
			scope.insert(scope.end(), variables.begin(), variables.end());

			std::vector<Formula> conjuncts;
			// equations on the bound variables give the simplifier something to inline
			if (chance(random, 0.5))
				conjuncts.push_back(Formula::compare(Relation::Equal, FoTerm::var(variables.front()),
					randomTerm(random, scope, variables.front().sort == Sort::Integer)));
			conjuncts.push_back(randomFormulaIn(random, scope, depth - 1));

			scope.resize(size);

			const auto body = conjuncts.size() == 1 ? conjuncts.front() : Formula::conjunction(conjuncts);

			if (choice == 4)
				return Formula::exists(variables, body);
			if (choice == 5)
				return Formula::forall(variables, Formula::implies(body, randomFormulaIn(random, scope, depth - 1)));

			return Formula::forall(variables, body);
		}
	}
}

}

Formula randomFormula(Random &random, std::size_t depth)
{
	std::vector<Variable> scope;
	return randomFormulaIn(random, scope, depth);
}

FiniteStdInterp randomFormulaModel(Random &random)
{
	Domain domain{{PrecomputedTerm::symbol("a"), PrecomputedTerm::symbol("b")}};
	for (std::int64_t value = -1; value <= 2; value++)
		domain.general.insert(PrecomputedTerm{value});

	Extras extras;
	extras.generalDomain = domain.general;
	extras.intRange = IntRange{-1, 2};

	const auto base = randomInterpretation(random, {{"p", 1}, {"q", 1}, {"r", 0}}, domain);
	return extendStandard(base, SignatureExt::Sigma0, std::move(extras));
}

}
