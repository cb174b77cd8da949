#ifndef OCOMP__SIMPLIFY_H
#define OCOMP__SIMPLIFY_H

#include <ocomp/bundle.h>
#include <ocomp/fol.h>

namespace ocomp
{

struct SimplifyOptions
{
	bool eliminateDoubleNegation = true;
};

Formula simplifyFormula(const Formula &formula, const SimplifyOptions &options = {});
TheoryBundle simplifyBundle(const TheoryBundle &bundle, const SimplifyOptions &options = {});

}

#endif
