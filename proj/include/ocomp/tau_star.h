#ifndef OCOMP__TAU_STAR_H
#define OCOMP__TAU_STAR_H

#include <ocomp/fol.h>
#include <ocomp/syntax.h>

#include <set>
#include <string>
#include <vector>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Fresh variables
//
////////////////////////////////////////////////////////////////////////////////////////////////////

class FreshVarSource
{
	public:
		FreshVarSource() = default;
		explicit FreshVarSource(std::set<std::string> taken);

		void reserve(const std::string &name);
		// base if still free, otherwise base1, base2, ...
		Variable fresh(const std::string &base, Sort sort = Sort::General);
		// V1, ..., Vn
		std::vector<Variable> freshTuple(const std::string &base, std::size_t count, Sort sort = Sort::General);

	private:
		std::set<std::string> m_taken;
};

Variable programVariable(const std::string &name);

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Translation
//
////////////////////////////////////////////////////////////////////////////////////////////////////

FoTerm toFoTerm(const ProgramTerm &term);

Formula valFormula(const ProgramTerm &term, const FoTerm &value, FreshVarSource &fresh);
// conjunction of val(t_i, V_i)
Formula valTuple(const std::vector<ProgramTerm> &terms, const std::vector<Variable> &values, FreshVarSource &fresh);

Formula tauB(const BodyElement &element, FreshVarSource &fresh);
Formula tauB(const std::vector<BodyElement> &body, FreshVarSource &fresh);

// antecedent of tau*(R) for basic and choice rules, head values bound to the given variables
Formula form(const Rule &rule, const std::vector<Variable> &headVariables, FreshVarSource &fresh);

Formula tauStarRule(const Rule &rule);
std::vector<Formula> tauStarProgram(const Program &program);

}

#endif
