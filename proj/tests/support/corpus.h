#ifndef OCOMP__TESTS__CORPUS_H
#define OCOMP__TESTS__CORPUS_H

#include <ocomp/fol.h>
#include <ocomp/ground.h>
#include <ocomp/ordered.h>
#include <ocomp/syntax.h>

#include <map>
#include <random>
#include <string>
#include <vector>

namespace ocomp::testing
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Exhaustive corpus
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct CorpusSignature
{
	std::size_t pArity = 0;
	std::size_t qArity = 0;
};

// p and q, each nullary or unary
std::vector<CorpusSignature> corpusSignatures();

// safe basic, choice and constraint rules; bodies of at most two literals, at most one negated
std::vector<Rule> corpusRules(const CorpusSignature &signature);

// sets of at most maxRules distinct rules
std::vector<Program> corpusPrograms(const CorpusSignature &signature, std::size_t maxRules = 3);

Domain corpusDomain();

// every subset of the ground atoms over the predicates
std::vector<Interpretation> allInterpretations(const std::vector<Predicate> &predicates, const Domain &domain);

// the same order on atoms as less_q_p facts
Interpretation orderFacts(const DerivationOrder &order);

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Ordered completion over finite interpretations
//
////////////////////////////////////////////////////////////////////////////////////////////////////

Formula sectionConjunction(const TheoryBundle &bundle, const std::vector<std::string> &names);

// OC(P) with every predicate completed, split into the order-free part and the rest
class OcChecker
{
	public:
		OcChecker(const Program &program, OrderVariant variant, Domain domain);
		OcChecker(const TheoryBundle &bundle, OrderVariant variant, Domain domain);

		// constraints and rules
		bool satisfiesBase(const Interpretation &interpretation) const;
		bool satisfiesWith(const Interpretation &interpretation, const Interpretation &orderFacts) const;
		bool satisfiesWith(const Interpretation &interpretation, const std::map<GroundAtom, std::int64_t> &levels) const;

		// some strict partial order on I, or some level map into 0..|I|-1
		bool admits(const Interpretation &interpretation) const;
		// strict total orders on I only
		bool admitsLinear(const Interpretation &interpretation) const;

	private:
		OrderVariant m_variant;
		Domain m_domain;
		CompiledFormula m_base;
		CompiledFormula m_axioms;
		CompiledFormula m_definitions;
};

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Random generators
//
////////////////////////////////////////////////////////////////////////////////////////////////////

using Random = std::mt19937_64;

// ground terms over small numerals, a symbol and every operator
ProgramTerm randomGroundTerm(Random &random, std::size_t depth = 3);

// programs with double negation, comparisons and guarded arithmetic
Program randomProgram(Random &random, std::size_t maxRules = 3);

Interpretation randomInterpretation(Random &random, const std::vector<Predicate> &predicates, const Domain &domain);

// closed formulas over p/1, q/1, r/0 with variables of both sorts
Formula randomFormula(Random &random, std::size_t depth = 4);

// finite interpretation for randomFormula over numerals -1..2 and symbols a, b
FiniteStdInterp randomFormulaModel(Random &random);

}

#endif
