#ifndef OCOMP__THEORY_H
#define OCOMP__THEORY_H

#include <ocomp/bundle.h>
#include <ocomp/fol.h>
#include <ocomp/ordered.h>

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Completion of tau*-shaped theories
//
////////////////////////////////////////////////////////////////////////////////////////////////////

// forall V y (F -> p(V))
struct DefiningFormula
{
	Predicate head;
	std::vector<Variable> headVariables;
	std::vector<Variable> localVariables;
	Formula form;
};

struct TauStarTheory
{
	std::vector<DefiningFormula> definitions;
	// forall y not F, kept as given
	std::vector<Formula> constraints;
	// heads first, then bodies, in order of first occurrence
	std::vector<Predicate> predicates;
};

// throws Error for formulas that are neither definitions nor constraints
TauStarTheory analyzeTauStar(const std::vector<Formula> &formulas);

std::vector<Predicate> headPredicates(const TauStarTheory &theory);
// exists-bound tau^B images of positive literals among the conjuncts of a form
std::vector<std::size_t> positiveLiteralConjuncts(const std::vector<Formula> &conjuncts);
std::set<std::pair<std::string, std::string>> orderEdges(const TauStarTheory &theory);

TheoryBundle completionBundle(const TauStarTheory &theory, bool completeUndefined = true);
TheoryBundle orderedCompletion(const TauStarTheory &theory, const OcConfig &config = {});

}

#endif
