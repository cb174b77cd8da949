#include <ocomp/bundle.h>
#include <ocomp/fol.h>

#include <map>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Terms
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string Variable::toString() const
{
	return sort == Sort::Integer ? name + "$i" : name;
}

FoTerm FoTerm::var(Variable variable)
{
	FoTerm term;
	term.kind = Kind::Variable;
	term.variable = std::move(variable);
	return term;
}

FoTerm FoTerm::var(std::string name, Sort sort)
{
	return var(Variable{std::move(name), sort});
}

FoTerm FoTerm::constantTerm(PrecomputedTerm value)
{
	FoTerm term;
	term.kind = Kind::Constant;
	term.constant = std::move(value);
	return term;
}

FoTerm FoTerm::absolute(FoTerm operand)
{
	FoTerm term;
	term.kind = Kind::Absolute;
	term.arguments.push_back(std::move(operand));
	return term;
}

FoTerm FoTerm::arithmetic(Kind kind, FoTerm left, FoTerm right)
{
	FoTerm term;
	term.kind = kind;
	term.arguments.push_back(std::move(left));
	term.arguments.push_back(std::move(right));
	return term;
}

FoTerm FoTerm::apply(std::string function, std::vector<FoTerm> arguments)
{
	FoTerm term;
	term.kind = Kind::Function;
	term.function = std::move(function);
	term.arguments = std::move(arguments);
	return term;
}

bool FoTerm::isIntegerSorted() const
{
	switch (kind)
	{
		case Kind::Variable:
			return variable.sort == Sort::Integer;
		case Kind::Constant:
			return constant.isNumeral();
		default:
			return true;
	}
}

bool FoTerm::contains(const Variable &other) const
{
	if (kind == Kind::Variable)
		return variable == other;

	for (const auto &argument : arguments)
		if (argument.contains(other))
			return true;

	return false;
}

void FoTerm::collectVariables(std::set<Variable> &variables) const
{
	if (kind == Kind::Variable)
		variables.insert(variable);

	for (const auto &argument : arguments)
		argument.collectVariables(variables);
}

namespace
{

int termPrecedence(const FoTerm &term)
{
	switch (term.kind)
	{
		case FoTerm::Kind::Plus:
		case FoTerm::Kind::Minus:
			return 2;
		case FoTerm::Kind::Multiply:
			return 1;
		default:
			return 0;
	}
}

}

std::string FoTerm::toString() const
{
	switch (kind)
	{
		case Kind::Variable:
			return variable.toString();
		case Kind::Constant:
			return constant.toString();
		case Kind::Absolute:
			return "|" + arguments[0].toString() + "|";
		case Kind::Function:
		{
			if (arguments.empty())
				return function;

			std::string result = function + "(";
			for (std::size_t i = 0; i < arguments.size(); i++)
				result += (i > 0 ? ", " : "") + arguments[i].toString();
			return result + ")";
		}
		case Kind::Plus:
		case Kind::Minus:
		case Kind::Multiply:
		{
			const auto precedence = termPrecedence(*this);
			auto left = arguments[0].toString();
			auto right = arguments[1].toString();

			if (termPrecedence(arguments[0]) > precedence)
				left = "(" + left + ")";
			if (termPrecedence(arguments[1]) >= precedence && termPrecedence(arguments[1]) > 0)
				right = "(" + right + ")";

			const char *op = kind == Kind::Plus ? " + " : kind == Kind::Minus ? " - " : " * ";
			return left + op + right;
		}
	}

	return "?";
}

FoTerm substitute(const FoTerm &term, const Variable &variable, const FoTerm &replacement)
{
	if (term.kind == FoTerm::Kind::Variable)
		return term.variable == variable ? replacement : term;

	if (!term.contains(variable))
		return term;

	auto result = term;
	for (auto &argument : result.arguments)
		argument = substitute(argument, variable, replacement);

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Formulas
//
////////////////////////////////////////////////////////////////////////////////////////////////////

Formula Formula::atom(std::string predicate, std::vector<FoTerm> arguments)
{
	Formula formula;
	formula.kind = Kind::Predicate;
	formula.predicate = std::move(predicate);
	formula.arguments = std::move(arguments);
	return formula;
}

Formula Formula::compare(Relation relation, FoTerm left, FoTerm right)
{
	Formula formula;
	formula.kind = Kind::Comparison;
	formula.relation = relation;
	formula.arguments.push_back(std::move(left));
	formula.arguments.push_back(std::move(right));
	return formula;
}

Formula Formula::bottom()
{
	return Formula{};
}

Formula Formula::top()
{
	Formula formula;
	formula.kind = Kind::And;
	return formula;
}

Formula Formula::conjunction(std::vector<Formula> children)
{
	Formula formula;
	formula.kind = Kind::And;
	formula.children = std::move(children);
	return formula;
}

Formula Formula::disjunction(std::vector<Formula> children)
{
	Formula formula;
	formula.kind = Kind::Or;
	formula.children = std::move(children);
	return formula;
}

Formula Formula::implies(Formula antecedent, Formula consequent, bool reversed)
{
	Formula formula;
	formula.kind = Kind::Implies;
	formula.children.push_back(std::move(antecedent));
	formula.children.push_back(std::move(consequent));
	formula.reversed = reversed;
	return formula;
}

Formula Formula::negation(Formula formula)
{
	return implies(std::move(formula), bottom());
}

Formula Formula::iff(Formula left, Formula right)
{
	auto forward = implies(left, right);
	auto backward = implies(std::move(right), std::move(left));
	return conjunction({std::move(forward), std::move(backward)});
}

Formula Formula::forall(std::vector<Variable> variables, Formula body)
{
	if (variables.empty())
		return body;

	Formula formula;
	formula.kind = Kind::Forall;
	formula.variables = std::move(variables);
	formula.children.push_back(std::move(body));
	return formula;
}

Formula Formula::exists(std::vector<Variable> variables, Formula body)
{
	if (variables.empty())
		return body;

	Formula formula;
	formula.kind = Kind::Exists;
	formula.variables = std::move(variables);
	formula.children.push_back(std::move(body));
	return formula;
}

namespace
{

void collectFree(const Formula &formula, std::set<Variable> &bound, std::set<Variable> &result)
{
	switch (formula.kind)
	{
		case Formula::Kind::Predicate:
		case Formula::Kind::Comparison:
		{
			std::set<Variable> variables;
			for (const auto &argument : formula.arguments)
				argument.collectVariables(variables);

			for (const auto &variable : variables)
				if (!bound.contains(variable))
					result.insert(variable);
			return;
		}
		case Formula::Kind::Forall:
		case Formula::Kind::Exists:
		{
			std::vector<Variable> added;
			for (const auto &variable : formula.variables)
				if (bound.insert(variable).second)
					added.push_back(variable);

			collectFree(formula.body(), bound, result);

			for (const auto &variable : added)
				bound.erase(variable);
			return;
		}
		default:
			for (const auto &child : formula.children)
				collectFree(child, bound, result);
	}
}

}

std::set<Variable> Formula::freeVariables() const
{
	std::set<Variable> bound;
	std::set<Variable> result;
	collectFree(*this, bound, result);
	return result;
}

std::size_t Formula::nodeCount() const
{
	std::size_t count = 1;

	for (const auto &child : children)
		count += child.nodeCount();

	return count;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Printing
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

enum class Precedence
{
	Atomic = 0,
	Negation = 1,
	And = 2,
	Or = 3,
	Implies = 4
};

const Formula &unwrapped(const Formula &formula)
{
	if ((formula.kind == Formula::Kind::And || formula.kind == Formula::Kind::Or) && formula.children.size() == 1)
		return unwrapped(formula.children.front());

	return formula;
}

Precedence precedence(const Formula &formula)
{
	if ((formula.kind == Formula::Kind::And || formula.kind == Formula::Kind::Or) && formula.children.size() == 1)
		return precedence(formula.children.front());

	switch (formula.kind)
	{
		case Formula::Kind::And:
			return formula.children.empty() ? Precedence::Atomic : Precedence::And;
		case Formula::Kind::Or:
			return formula.children.empty() ? Precedence::Atomic : Precedence::Or;
		case Formula::Kind::Implies:
			return formula.isNegation() && !formula.reversed ? Precedence::Negation : Precedence::Implies;
		default:
			return Precedence::Atomic;
	}
}

void print(const Formula &formula, std::string &out);

// binary connectives of at least the parent's precedence get parentheses
void printChild(const Formula &child, Precedence parent, std::string &out)
{
	const auto childPrecedence = precedence(child);

	if (childPrecedence > Precedence::Negation && childPrecedence >= parent)
	{
		out += "(";
		print(child, out);
		out += ")";
		return;
	}

	print(child, out);
}

void print(const Formula &formula, std::string &out)
{
	switch (formula.kind)
	{
		case Formula::Kind::Predicate:
		{
			out += formula.predicate;

			if (formula.arguments.empty())
				return;

			out += "(";
			for (std::size_t i = 0; i < formula.arguments.size(); i++)
			{
				if (i > 0)
					out += ", ";
				out += formula.arguments[i].toString();
			}
			out += ")";
			return;
		}
		case Formula::Kind::Comparison:
			out += formula.arguments[0].toString() + " " + toString(formula.relation) + " " + formula.arguments[1].toString();
			return;
		case Formula::Kind::Bottom:
			out += "#false";
			return;
		case Formula::Kind::And:
		case Formula::Kind::Or:
		{
			if (formula.children.empty())
			{
				out += formula.kind == Formula::Kind::And ? "#true" : "#false";
				return;
			}

			if (formula.children.size() == 1)
			{
				print(formula.children.front(), out);
				return;
			}

			const auto self = precedence(formula);
			const char *separator = formula.kind == Formula::Kind::And ? " and " : " or ";

			for (std::size_t i = 0; i < formula.children.size(); i++)
			{
				if (i > 0)
					out += separator;
				printChild(formula.children[i], self, out);
			}
			return;
		}
		case Formula::Kind::Implies:
		{
			if (precedence(formula) == Precedence::Negation)
			{
				out += "not ";
				printChild(formula.left(), Precedence::Negation, out);
				return;
			}

			if (formula.reversed)
			{
				printChild(formula.right(), Precedence::Implies, out);
				out += " <- ";
				printChild(formula.left(), Precedence::Implies, out);
				return;
			}

			printChild(formula.left(), Precedence::Implies, out);
			out += " -> ";
			printChild(formula.right(), Precedence::Implies, out);
			return;
		}
		case Formula::Kind::Forall:
		case Formula::Kind::Exists:
		{
			out += formula.kind == Formula::Kind::Forall ? "forall" : "exists";
			for (const auto &variable : formula.variables)
				out += " " + variable.toString();
			out += " ";

			const auto &body = formula.body();

			if (precedence(body) > Precedence::Negation || unwrapped(body).kind == Formula::Kind::Comparison)
			{
				out += "(";
				print(body, out);
				out += ")";
			}
			else
				print(body, out);
			return;
		}
	}
}

}

std::string Formula::toString() const
{
	std::string result;
	print(*this, result);
	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Substitution and renaming
//
////////////////////////////////////////////////////////////////////////////////////////////////////

void collectAllVariableNames(const Formula &formula, std::set<std::string> &names)
{
	std::set<Variable> variables;
	for (const auto &argument : formula.arguments)
		argument.collectVariables(variables);
	for (const auto &variable : formula.variables)
		variables.insert(variable);
	for (const auto &variable : variables)
		names.insert(variable.name);

	for (const auto &child : formula.children)
		collectAllVariableNames(child, names);
}

namespace
{

bool occursFree(const Formula &formula, const Variable &variable)
{
	switch (formula.kind)
	{
		case Formula::Kind::Predicate:
		case Formula::Kind::Comparison:
			for (const auto &argument : formula.arguments)
				if (argument.contains(variable))
					return true;
			return false;
		case Formula::Kind::Forall:
		case Formula::Kind::Exists:
			for (const auto &bound : formula.variables)
				if (bound == variable)
					return false;
			return occursFree(formula.body(), variable);
		default:
			for (const auto &child : formula.children)
				if (occursFree(child, variable))
					return true;
			return false;
	}
}

Formula substituteImpl(const Formula &formula, const Variable &variable, const FoTerm &term, const std::set<Variable> &termVariables)
{
	switch (formula.kind)
	{
		case Formula::Kind::Predicate:
		case Formula::Kind::Comparison:
		{
			auto result = formula;
			for (auto &argument : result.arguments)
				argument = substitute(argument, variable, term);
			return result;
		}
		case Formula::Kind::Forall:
		case Formula::Kind::Exists:
		{
			for (const auto &bound : formula.variables)
				if (bound == variable)
					return formula;

			if (!occursFree(formula.body(), variable))
				return formula;

			auto result = formula;

			// rename bound variables that would capture the term
			for (auto &bound : result.variables)
			{
				if (!termVariables.contains(bound))
					continue;

				std::set<std::string> names;
				collectAllVariableNames(result, names);
				for (const auto &termVariable : termVariables)
					names.insert(termVariable.name);
				names.insert(variable.name);

				Variable renamed{bound.name, bound.sort};
				for (std::size_t index = 1; names.contains(renamed.name); index++)
					renamed.name = bound.name + "_" + std::to_string(index);

				result.children[0] = substitute(result.children[0], bound, FoTerm::var(renamed));
				bound = renamed;
			}

			result.children[0] = substituteImpl(result.children[0], variable, term, termVariables);
			return result;
		}
		default:
		{
			auto result = formula;
			for (auto &child : result.children)
				child = substituteImpl(child, variable, term, termVariables);
			return result;
		}
	}
}

void renameTerm(FoTerm &term, const std::map<Variable, Variable> &mapping)
{
	if (term.kind == FoTerm::Kind::Variable)
		if (const auto match = mapping.find(term.variable); match != mapping.end())
			term.variable = match->second;

	for (auto &argument : term.arguments)
		renameTerm(argument, mapping);
}

void canonicalize(Formula &formula, std::map<Variable, Variable> &mapping, std::size_t &counter)
{
	switch (formula.kind)
	{
		case Formula::Kind::Predicate:
		case Formula::Kind::Comparison:
			for (auto &argument : formula.arguments)
				renameTerm(argument, mapping);
			return;
		case Formula::Kind::Forall:
		case Formula::Kind::Exists:
		{
			auto saved = mapping;

			for (auto &variable : formula.variables)
			{
				Variable renamed{"X" + std::to_string(++counter), variable.sort};
				mapping[variable] = renamed;
				variable = renamed;
			}

			canonicalize(formula.children[0], mapping, counter);
			mapping = std::move(saved);
			return;
		}
		default:
			for (auto &child : formula.children)
				canonicalize(child, mapping, counter);
	}
}

}

Formula substitute(const Formula &formula, const Variable &variable, const FoTerm &term)
{
	std::set<Variable> termVariables;
	term.collectVariables(termVariables);
	return substituteImpl(formula, variable, term, termVariables);
}

Formula canonicalRenaming(const Formula &formula)
{
	auto result = formula;
	std::map<Variable, Variable> mapping;
	std::size_t counter = 0;
	canonicalize(result, mapping, counter);
	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Ground atoms
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string GroundAtom::toString() const
{
	if (arguments.empty())
		return predicate;

	std::string result = predicate + "(";
	for (std::size_t i = 0; i < arguments.size(); i++)
		result += (i > 0 ? ", " : "") + arguments[i].toString();
	return result + ")";
}

std::string toString(const Interpretation &interpretation)
{
	std::string result = "{";
	bool first = true;

	for (const auto &atom : interpretation)
	{
		result += first ? "" : ", ";
		result += atom.toString();
		first = false;
	}

	return result + "}";
}

std::string orderPredicateName(const std::string &p, const std::string &q)
{
	return "less_" + p + "_" + q;
}

std::string levelFunctionName(const std::string &p)
{
	return "lvl_" + p;
}

FiniteStdInterp extendStandard(const Interpretation &interpretation, SignatureExt ext, Extras extras)
{
	FiniteStdInterp model;
	model.base = interpretation;
	model.generalDomain = std::move(extras.generalDomain);
	model.intRange = extras.intRange;

	switch (ext)
	{
		case SignatureExt::Sigma0:
			if (extras.orderFacts || extras.levelMap)
				throw Error("extension components given for the base signature");
			break;
		case SignatureExt::SigmaOrder:
			if (extras.levelMap)
				throw Error("level map given for the order-predicate signature");
			if (extras.orderFacts)
				model.orderFacts = std::move(*extras.orderFacts);
			break;
		case SignatureExt::SigmaLevel:
			if (extras.orderFacts)
				throw Error("order facts given for the level-mapping signature");
			if (extras.levelMap)
				model.levelMap = std::move(*extras.levelMap);
			break;
	}

	return model;
}

FiniteStdInterp restrict(const FiniteStdInterp &model)
{
	FiniteStdInterp result;
	result.base = model.base;
	result.generalDomain = model.generalDomain;
	result.intRange = model.intRange;
	return result;
}

const Interpretation &atomsOf(const FiniteStdInterp &model)
{
	return model.base;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Theory bundles
//
////////////////////////////////////////////////////////////////////////////////////////////////////

TheorySection &TheoryBundle::section(const std::string &name)
{
	for (auto &section : sections)
		if (section.name == name)
			return section;

	sections.push_back(TheorySection{name, {}});
	return sections.back();
}

const TheorySection *TheoryBundle::findSection(const std::string &name) const
{
	for (const auto &section : sections)
		if (section.name == name)
			return &section;

	return nullptr;
}

std::vector<NamedFormula> TheoryBundle::formulas() const
{
	std::vector<NamedFormula> result;

	for (const auto &section : sections)
		result.insert(result.end(), section.formulas.begin(), section.formulas.end());

	return result;
}

Formula TheoryBundle::conjunction() const
{
	std::vector<Formula> children;

	for (const auto &formula : formulas())
		children.push_back(formula.formula);

	if (children.size() == 1)
		return std::move(children.front());

	return Formula::conjunction(std::move(children));
}

}
