#ifndef OCOMP__BUNDLE_H
#define OCOMP__BUNDLE_H

#include <ocomp/fol.h>

#include <string>
#include <vector>

namespace ocomp
{

struct NamedFormula
{
	std::string name;
	Formula formula;
};

struct TheorySection
{
	std::string name;
	std::vector<NamedFormula> formulas;
};

// named formula groups, conjunction of everything is the theory
struct TheoryBundle
{
	std::vector<TheorySection> sections;

	TheorySection &section(const std::string &name);
	const TheorySection *findSection(const std::string &name) const;
	std::vector<NamedFormula> formulas() const;
	Formula conjunction() const;
};

}

#endif
