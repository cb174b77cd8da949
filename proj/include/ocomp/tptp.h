#ifndef OCOMP__TPTP_H
#define OCOMP__TPTP_H

#include <ocomp/bundle.h>
#include <ocomp/fol.h>

#include <string>
#include <vector>

namespace ocomp
{

struct TptpProblem
{
	// tff lines, in emission order
	std::vector<std::string> typeDeclarations;
	std::vector<std::string> axioms;
	std::vector<std::string> conjectures;

	std::string toString() const;
};

struct UnsupportedError : Error
{
	using Error::Error;
};

TptpProblem emitTptp(const TheoryBundle &bundle, const std::vector<NamedFormula> &conjectures);

// formula body in tff syntax, used by emitTptp
std::string tptpFormula(const Formula &formula);

}

#endif
