#ifndef OCOMP__ORDERED_H
#define OCOMP__ORDERED_H

#include <ocomp/bundle.h>
#include <ocomp/fol.h>
#include <ocomp/syntax.h>

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ocomp
{

enum class OrderVariant
{
	OrderPredicates,
	LevelMapping
};

struct OcConfig
{
	OrderVariant variant = OrderVariant::OrderPredicates;
	bool simplified = true;
	bool completeUndefined = false;
	// axiom instances only for pairs that occur in some ord atom
	bool minimalAxioms = false;
};

struct CollisionError : Error
{
	using Error::Error;
};

// throws CollisionError if less_* or lvl_* names clash with program predicates
void checkOrderVocabulary(const Program &program);
void checkOrderVocabulary(const std::vector<Predicate> &predicates);

// pairs (q, p) with q in the positive body of some rule for p
std::set<std::pair<std::string, std::string>> orderEdges(const Program &program);

// ord(q(z), p(x)) for the configured variant
Formula ordAtom(OrderVariant variant, const Predicate &q, const std::vector<FoTerm> &z, const Predicate &p, const std::vector<FoTerm> &x);

std::vector<NamedFormula> axioms(const Program &program, OrderVariant variant, bool minimal = false);
// minimal instances follow the transitive closure of the edges
std::vector<NamedFormula> axioms(const std::vector<Predicate> &predicates, const std::set<std::pair<std::string, std::string>> &edges,
	OrderVariant variant, bool minimal = false);
Formula ocDef(const Program &program, const Predicate &predicate, const OcConfig &config);

TheoryBundle orderedCompletion(const Program &program, const OcConfig &config = {});

}

#endif
