#include <ocomp/tptp.h>

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Symbol collection
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

constexpr const char *GeneralSort = "general";
constexpr const char *Injection = "f__integer__";
constexpr const char *AbsoluteFunction = "f__abs__";
constexpr const char *LessPredicate = "p__less__";

struct Vocabulary
{
	std::map<std::string, std::size_t> predicates;
	std::map<std::string, std::size_t> functions;
	std::set<PrecomputedTerm> constants;
	bool absolute = false;
	bool generalOrder = false;
};

std::string constantName(const PrecomputedTerm &value)
{
	if (value.isInfimum())
		return "c__inf__";
	if (value.isSupremum())
		return "c__sup__";
	return "c__" + value.name();
}

void collect(const FoTerm &term, Vocabulary &vocabulary)
{
	switch (term.kind)
	{
		case FoTerm::Kind::Constant:
			if (!term.constant.isNumeral())
				vocabulary.constants.insert(term.constant);
			break;
		case FoTerm::Kind::Absolute:
			vocabulary.absolute = true;
			break;
		case FoTerm::Kind::Function:
		{
			const auto [position, inserted] = vocabulary.functions.emplace(term.function, term.arguments.size());
			if (!inserted && position->second != term.arguments.size())
				throw UnsupportedError("function " + term.function + " used with two arities");
			break;
		}
		default:
			break;
	}

	for (const auto &argument : term.arguments)
		collect(argument, vocabulary);
}

bool isOrdering(Relation relation)
{
	return relation != Relation::Equal && relation != Relation::NotEqual;
}

void collect(const Formula &formula, Vocabulary &vocabulary)
{
	switch (formula.kind)
	{
		case Formula::Kind::Predicate:
		{
			const auto [position, inserted] = vocabulary.predicates.emplace(formula.predicate, formula.arguments.size());
			if (!inserted && position->second != formula.arguments.size())
				throw UnsupportedError("predicate " + formula.predicate + " used with two arities");
			break;
		}
		case Formula::Kind::Comparison:
		{
			const bool integers = formula.arguments[0].isIntegerSorted() && formula.arguments[1].isIntegerSorted();
			if (!integers && isOrdering(formula.relation))
				vocabulary.generalOrder = true;
			break;
		}
		default:
			break;
	}

	for (const auto &argument : formula.arguments)
		collect(argument, vocabulary);

	for (const auto &child : formula.children)
		collect(child, vocabulary);
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Printing
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string variableName(const Variable &variable)
{
	if (variable.sort == Sort::Integer)
		return variable.name + "__int";

	return variable.name;
}

std::string integerTerm(const FoTerm &term);
std::string generalTerm(const FoTerm &term);

std::string argumentList(const std::vector<FoTerm> &arguments)
{
	std::string result = "(";

	for (std::size_t i = 0; i < arguments.size(); i++)
	{
		if (i > 0)
			result += ", ";
		result += generalTerm(arguments[i]);
	}

	return result + ")";
}

std::string integerTerm(const FoTerm &term)
{
	switch (term.kind)
	{
		case FoTerm::Kind::Variable:
			if (term.variable.sort != Sort::Integer)
				throw UnsupportedError("general variable " + term.variable.name + " in integer position");
			return variableName(term.variable);
		case FoTerm::Kind::Constant:
			if (!term.constant.isNumeral())
				throw UnsupportedError("symbolic constant in integer position");
			return std::to_string(term.constant.numeral());
		case FoTerm::Kind::Absolute:
			return std::string(AbsoluteFunction) + "(" + integerTerm(term.arguments[0]) + ")";
		case FoTerm::Kind::Plus:
			return "$sum(" + integerTerm(term.arguments[0]) + ", " + integerTerm(term.arguments[1]) + ")";
		case FoTerm::Kind::Minus:
			return "$difference(" + integerTerm(term.arguments[0]) + ", " + integerTerm(term.arguments[1]) + ")";
		case FoTerm::Kind::Multiply:
			return "$product(" + integerTerm(term.arguments[0]) + ", " + integerTerm(term.arguments[1]) + ")";
		case FoTerm::Kind::Function:
			if (term.arguments.empty())
				return term.function;
			return term.function + argumentList(term.arguments);
	}

	throw UnsupportedError("unknown term");
}

std::string generalTerm(const FoTerm &term)
{
	if (term.isIntegerSorted())
		return std::string(Injection) + "(" + integerTerm(term) + ")";

	switch (term.kind)
	{
		case FoTerm::Kind::Variable:
			return variableName(term.variable);
		case FoTerm::Kind::Constant:
			return constantName(term.constant);
		default:
			throw UnsupportedError("term " + term.toString() + " has no general-sort encoding");
	}
}

std::string comparison(const Formula &formula)
{
	const auto &left = formula.arguments[0];
	const auto &right = formula.arguments[1];

	if (left.isIntegerSorted() && right.isIntegerSorted())
	{
		const auto a = integerTerm(left);
		const auto b = integerTerm(right);

		switch (formula.relation)
		{
			case Relation::Equal:
				return a + " = " + b;
			case Relation::NotEqual:
				return a + " != " + b;
			case Relation::Less:
				return "$less(" + a + ", " + b + ")";
			case Relation::LessEqual:
				return "$lesseq(" + a + ", " + b + ")";
			case Relation::Greater:
				return "$greater(" + a + ", " + b + ")";
			case Relation::GreaterEqual:
				return "$greatereq(" + a + ", " + b + ")";
		}
	}

	const auto a = generalTerm(left);
	const auto b = generalTerm(right);
	const auto less = [](const std::string &x, const std::string &y) { return std::string(LessPredicate) + "(" + x + ", " + y + ")"; };

	switch (formula.relation)
	{
		case Relation::Equal:
			return a + " = " + b;
		case Relation::NotEqual:
			return a + " != " + b;
		case Relation::Less:
			return less(a, b);
		case Relation::LessEqual:
			return "(" + a + " = " + b + " | " + less(a, b) + ")";
		case Relation::Greater:
			return less(b, a);
		case Relation::GreaterEqual:
			return "(" + a + " = " + b + " | " + less(b, a) + ")";
	}

	throw UnsupportedError("unknown relation");
}

std::string joined(const std::vector<Formula> &children, const char *connective, const char *empty);

std::string print(const Formula &formula)
{
	switch (formula.kind)
	{
		case Formula::Kind::Predicate:
			if (formula.arguments.empty())
				return formula.predicate;
			return formula.predicate + argumentList(formula.arguments);
		case Formula::Kind::Comparison:
			return comparison(formula);
		case Formula::Kind::Bottom:
			return "$false";
		case Formula::Kind::And:
			return joined(formula.children, " & ", "$true");
		case Formula::Kind::Or:
			return joined(formula.children, " | ", "$false");
		case Formula::Kind::Implies:
			if (formula.isNegation())
				return "~(" + print(formula.left()) + ")";
			return "(" + print(formula.left()) + " => " + print(formula.right()) + ")";
		case Formula::Kind::Forall:
		case Formula::Kind::Exists:
		{
			std::string result = formula.kind == Formula::Kind::Forall ? "! [" : "? [";

			for (std::size_t i = 0; i < formula.variables.size(); i++)
			{
				const auto &variable = formula.variables[i];
				if (i > 0)
					result += ", ";
				result += variableName(variable) + ": " + (variable.sort == Sort::Integer ? "$int" : GeneralSort);
			}

			return result + "] : (" + print(formula.body()) + ")";
		}
	}

	throw UnsupportedError("unknown formula");
}

std::string joined(const std::vector<Formula> &children, const char *connective, const char *empty)
{
	if (children.empty())
		return empty;

	if (children.size() == 1)
		return print(children.front());

	std::string result = "(";

	for (std::size_t i = 0; i < children.size(); i++)
	{
		if (i > 0)
			result += connective;
		result += print(children[i]);
	}

	return result + ")";
}

std::string signature(std::size_t arity, const std::string &result)
{
	if (arity == 0)
		return result;

	std::string arguments;
	for (std::size_t i = 0; i < arity; i++)
		arguments += (i > 0 ? " * " : "") + std::string(GeneralSort);

	if (arity == 1)
		return arguments + " > " + result;

	return "(" + arguments + ") > " + result;
}

std::string sanitize(const std::string &name)
{
	std::string result;

	for (const auto character : name)
		result += std::isalnum(static_cast<unsigned char>(character)) ? character : '_';

	if (result.empty() || !std::islower(static_cast<unsigned char>(result.front())))
		result = "f_" + result;

	return result;
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Problems
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string tptpFormula(const Formula &formula)
{
	return print(formula);
}

std::string TptpProblem::toString() const
{
	std::ostringstream stream;

	for (const auto &line : typeDeclarations)
		stream << line << "\n";
	for (const auto &line : axioms)
		stream << line << "\n";
	for (const auto &line : conjectures)
		stream << line << "\n";

	return stream.str();
}

TptpProblem emitTptp(const TheoryBundle &bundle, const std::vector<NamedFormula> &conjectures)
{
	const auto formulas = bundle.formulas();

	Vocabulary vocabulary;
	for (const auto &named : formulas)
		collect(named.formula, vocabulary);
	for (const auto &named : conjectures)
		collect(named.formula, vocabulary);

	for (const auto &[name, arity] : vocabulary.predicates)
		if (vocabulary.functions.contains(name))
			throw UnsupportedError("symbol " + name + " used as predicate and function");

	if (vocabulary.generalOrder)
	{
		vocabulary.constants.insert(PrecomputedTerm{Infimum{}});
		vocabulary.constants.insert(PrecomputedTerm{Supremum{}});
	}

	TptpProblem problem;
	std::set<std::string> usedNames;

	const auto declare = [&](const std::string &name, const std::string &type)
	{
		problem.typeDeclarations.push_back("tff(" + sanitize("type_" + name) + ", type, " + name + ": " + type + ").");
	};

	const auto uniqueName = [&](const std::string &name)
	{
		auto result = sanitize(name);
		for (std::size_t index = 1; !usedNames.insert(result).second; index++)
			result = sanitize(name) + "_" + std::to_string(index);
		return result;
	};

	const auto addAxiom = [&](const std::string &name, const std::string &body)
	{
		problem.axioms.push_back("tff(" + uniqueName(name) + ", axiom, " + body + ").");
	};

	problem.typeDeclarations.push_back(std::string("tff(type_general, type, ") + GeneralSort + ": $tType).");
	declare(Injection, std::string("$int > ") + GeneralSort);

	if (vocabulary.absolute)
		declare(AbsoluteFunction, "$int > $int");

	if (vocabulary.generalOrder)
		declare(LessPredicate, signature(2, "$o"));

	for (const auto &constant : vocabulary.constants)
		declare(constantName(constant), GeneralSort);

	for (const auto &[name, arity] : vocabulary.functions)
		declare(name, signature(arity, "$int"));

	for (const auto &[name, arity] : vocabulary.predicates)
		declare(name, signature(arity, "$o"));

	addAxiom("integer_injective", std::string("! [X: $int, Y: $int] : (") + Injection + "(X) = " + Injection + "(Y) => X = Y)");

	if (vocabulary.absolute)
		addAxiom("absolute_value", std::string("! [X: $int] : (($greatereq(X, 0) => ") + AbsoluteFunction + "(X) = X) & ($less(X, 0) => "
			+ AbsoluteFunction + "(X) = $uminus(X)))");

	// in precomputed term order
	const std::vector<PrecomputedTerm> constants(vocabulary.constants.begin(), vocabulary.constants.end());

	for (std::size_t i = 0; i < constants.size(); i++)
	{
		const auto a = constantName(constants[i]);
		addAxiom("integer_distinct_" + a, std::string("! [X: $int] : ") + Injection + "(X) != " + a);

		for (std::size_t j = i + 1; j < constants.size(); j++)
			addAxiom("distinct_" + a + "_" + constantName(constants[j]), a + " != " + constantName(constants[j]));
	}

	if (vocabulary.generalOrder)
	{
		const std::string less = LessPredicate;
		const auto g = std::string(GeneralSort);

		addAxiom("less_irreflexive", "! [X: " + g + "] : ~" + less + "(X, X)");
		addAxiom("less_transitive", "! [X: " + g + ", Y: " + g + ", Z: " + g + "] : ((" + less + "(X, Y) & " + less + "(Y, Z)) => " + less + "(X, Z))");
		addAxiom("less_total", "! [X: " + g + ", Y: " + g + "] : (X = Y | " + less + "(X, Y) | " + less + "(Y, X))");
		addAxiom("less_integers", "! [X: $int, Y: $int] : (" + less + "(" + Injection + "(X), " + Injection + "(Y)) <=> $less(X, Y))");
		addAxiom("less_infimum", "! [X: " + g + "] : (X = c__inf__ | " + less + "(c__inf__, X))");
		addAxiom("less_supremum", "! [X: " + g + "] : (X = c__sup__ | " + less + "(X, c__sup__))");

		for (const auto &constant : constants)
			if (constant.isSymbol())
				addAxiom("less_integer_" + constantName(constant), "! [X: $int] : " + less + "(" + Injection + "(X), " + constantName(constant) + ")");

		for (std::size_t i = 0; i + 1 < constants.size(); i++)
			addAxiom("less_" + constantName(constants[i]) + "_" + constantName(constants[i + 1]),
				less + "(" + constantName(constants[i]) + ", " + constantName(constants[i + 1]) + ")");
	}

	for (const auto &named : formulas)
		addAxiom(named.name, print(named.formula));

	for (const auto &named : conjectures)
		problem.conjectures.push_back("tff(" + uniqueName(named.name) + ", conjecture, " + print(named.formula) + ").");

	return problem;
}

}
