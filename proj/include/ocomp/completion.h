#ifndef OCOMP__COMPLETION_H
#define OCOMP__COMPLETION_H

#include <ocomp/bundle.h>
#include <ocomp/fol.h>
#include <ocomp/syntax.h>

#include <vector>

namespace ocomp
{

struct PredicateCompletion
{
	Predicate predicate;
	// forall x (disjunction of Form -> p(x))
	Formula rules;
	// forall x (p(x) -> disjunction of Form)
	Formula definition;
};

struct CompletionParts
{
	std::vector<PredicateCompletion> predicates;
	Formula constraints;
	std::vector<Formula> constraintFormulas;
};

// rules whose head predicate is p
std::vector<const Rule *> definingRules(const Program &program, const Predicate &predicate);
// fresh head variables for p, distinct from every variable of its rules
std::vector<Variable> headVariables(const Program &program, const Predicate &predicate);
// disjunction over the defining rules of exists y Form(R, x)
Formula formDisjunction(const Program &program, const Predicate &predicate, const std::vector<Variable> &x);
Formula compRules(const Program &program, const Predicate &predicate);
Formula compDef(const Program &program, const Predicate &predicate);
Formula constraintFormula(const Rule &constraint);

CompletionParts completionParts(const Program &program, bool completeUndefined = true);
Formula completion(const Program &program, bool completeUndefined = true);
TheoryBundle completionBundle(const Program &program, bool completeUndefined = true);

bool isTight(const Program &program);

}

#endif
