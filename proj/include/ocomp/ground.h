#ifndef OCOMP__GROUND_H
#define OCOMP__GROUND_H

#include <ocomp/fol.h>
#include <ocomp/syntax.h>

#include <memory>
#include <set>
#include <utility>
#include <variant>
#include <vector>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Values of ground terms
//
////////////////////////////////////////////////////////////////////////////////////////////////////

// intervals larger than this are rejected
constexpr std::int64_t MaxIntervalSize = 1'000'000;

std::set<PrecomputedTerm> values(const ProgramTerm &term);

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Propositional formulas
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct PropFormula
{
	enum class Kind
	{
		Atom,
		Bottom,
		Top,
		And,
		Or,
		Implies
	};

	Kind kind = Kind::Bottom;
	GroundAtom atom;
	std::vector<PropFormula> children;

	static PropFormula makeAtom(GroundAtom atom);
	static PropFormula bottom();
	static PropFormula top();
	static PropFormula conjunction(std::vector<PropFormula> children);
	static PropFormula disjunction(std::vector<PropFormula> children);
	static PropFormula implies(PropFormula antecedent, PropFormula consequent);
	static PropFormula negation(PropFormula formula);

	std::string toString() const;
	bool operator==(const PropFormula &other) const = default;
};

bool satisfies(const Interpretation &interpretation, const PropFormula &formula);

PropFormula tauGroundRule(const Rule &rule);
PropFormula tauGroundBody(const std::vector<BodyElement> &body);

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Instantiation
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct Domain
{
	std::set<PrecomputedTerm> general;
};

Rule substituteRule(const Rule &rule, const std::string &variable, const PrecomputedTerm &value);
std::vector<Rule> instantiate(const Rule &rule, const Domain &domain);
std::vector<Rule> instantiate(const Program &program, const Domain &domain);
// constants of the program plus its integers widened by radius
Domain defaultDomain(const Program &program, std::int64_t radius = 2);
// every ground atom over the program's predicates with arguments from the domain
std::vector<GroundAtom> herbrandAtoms(const std::vector<Predicate> &predicates, const Domain &domain);

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Reducts
//
////////////////////////////////////////////////////////////////////////////////////////////////////

PropFormula reduct(const PropFormula &formula, const Interpretation &interpretation);

struct ReductClause
{
	// conjunction of disjunctions
	std::vector<std::vector<GroundAtom>> body;
	std::vector<GroundAtom> head;

	std::string toString() const;
	auto operator<=>(const ReductClause &) const = default;
};

using ReductTheory = std::set<ReductClause>;

struct UnsatisfiedMarker
{
	bool operator==(const UnsatisfiedMarker &) const = default;
};

using NormalizedReduct = std::variant<ReductTheory, UnsatisfiedMarker>;

// per ground rule; nullopt means the clause is dropped
std::variant<std::optional<ReductClause>, UnsatisfiedMarker> normalizeReduct(const Rule &groundRule, const Interpretation &interpretation);
NormalizedReduct normalizeReduct(const std::vector<Rule> &groundRules, const Interpretation &interpretation);
NormalizedReduct normalizeReduct(const Program &program, const Interpretation &interpretation, const Domain &domain);

Interpretation immediateConsequences(const ReductTheory &theory, const Interpretation &interpretation);
Interpretation minimalModel(const ReductTheory &theory);

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Model checks
//
////////////////////////////////////////////////////////////////////////////////////////////////////

// I |= tau(R) for every instance
bool satisfiesProgram(const std::vector<Rule> &groundRules, const Interpretation &interpretation);

bool isStable(const std::vector<Rule> &groundRules, const Interpretation &interpretation);
bool isStable(const Program &program, const Interpretation &interpretation, const Domain &domain);
bool isSupported(const std::vector<Rule> &groundRules, const Interpretation &interpretation);
bool isSupported(const Program &program, const Interpretation &interpretation, const Domain &domain);

using DerivationOrder = std::set<std::pair<GroundAtom, GroundAtom>>;

struct WellSupport
{
	bool wellSupported = false;
	// layer index of each derived atom, starting at 1
	std::map<GroundAtom, std::size_t> rank;
};

WellSupport wellSupport(const std::vector<Rule> &groundRules, const Interpretation &interpretation);
bool isWellSupported(const std::vector<Rule> &groundRules, const Interpretation &interpretation);
bool isWellSupported(const Program &program, const Interpretation &interpretation, const Domain &domain);

// conditions of the definition checked for one order
bool witnessesWellSupport(const std::vector<Rule> &groundRules, const Interpretation &interpretation, const DerivationOrder &order);
// every strict partial order on the interpretation
std::vector<DerivationOrder> strictPartialOrders(const Interpretation &interpretation);
// tries all strict partial orders, only for |I| <= 4
bool isWellSupportedExhaustive(const std::vector<Rule> &groundRules, const Interpretation &interpretation);

std::vector<Interpretation> stableModels(const Program &program, const Domain &domain);

}

#endif
