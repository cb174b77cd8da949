#include <ocomp/syntax.h>

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace ocomp
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Errors and arithmetic
//
////////////////////////////////////////////////////////////////////////////////////////////////////

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string &message)
:	Error{std::to_string(line) + ":" + std::to_string(column) + ": " + message},
	line{line},
	column{column}
{
}

std::int64_t checkedAdd(std::int64_t a, std::int64_t b)
{
	std::int64_t result;
	if (__builtin_add_overflow(a, b, &result))
		throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
	return result;
}

std::int64_t checkedSub(std::int64_t a, std::int64_t b)
{
	std::int64_t result;
	if (__builtin_sub_overflow(a, b, &result))
		throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
	return result;
}

std::int64_t checkedMul(std::int64_t a, std::int64_t b)
{
	std::int64_t result;
	if (__builtin_mul_overflow(a, b, &result))
		throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
	return result;
}

std::int64_t checkedAbs(std::int64_t a)
{
	if (a == std::numeric_limits<std::int64_t>::min())
		throw OverflowError("integer overflow in |" + std::to_string(a) + "|");
	return a < 0 ? -a : a;
}

std::int64_t checkedDiv(std::int64_t a, std::int64_t b)
{
	if (b == 0)
		throw Error("division by zero");
	if (a == std::numeric_limits<std::int64_t>::min() && b == -1)
		throw OverflowError("integer overflow in " + std::to_string(a) + " / -1");
	// C++ division truncates toward zero
	return a / b;
}

std::int64_t checkedMod(std::int64_t a, std::int64_t b)
{
	return checkedSub(a, checkedMul(b, checkedDiv(a, b)));
}

bool isIdentifier(const std::string &name)
{
	if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z'))
		return false;

	return std::all_of(name.begin(), name.end(),
		[](char c)
		{
			return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
		});
}

bool isVariableName(const std::string &name)
{
	if (name.empty() || !(name[0] >= 'A' && name[0] <= 'Z'))
		return false;

	return std::all_of(name.begin(), name.end(),
		[](char c)
		{
			return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
		});
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Precomputed terms
//
////////////////////////////////////////////////////////////////////////////////////////////////////

PrecomputedTerm PrecomputedTerm::symbol(std::string name)
{
	return PrecomputedTerm{Symbol{std::move(name)}};
}

std::string PrecomputedTerm::toString() const
{
	if (isInfimum())
		return "#inf";
	if (isSupremum())
		return "#sup";
	if (isNumeral())
		return std::to_string(numeral());
	return name();
}

std::strong_ordering precomputedCompare(const PrecomputedTerm &a, const PrecomputedTerm &b)
{
	return a <=> b;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Program terms
//
////////////////////////////////////////////////////////////////////////////////////////////////////

const char *toString(BinaryOperator op)
{
	switch (op)
	{
		case BinaryOperator::Plus:
			return "+";
		case BinaryOperator::Minus:
			return "-";
		case BinaryOperator::Multiply:
			return "*";
		case BinaryOperator::Divide:
			return "/";
		case BinaryOperator::Modulo:
			return "\\";
		case BinaryOperator::Interval:
			return "..";
	}

	return "?";
}

ProgramTerm ProgramTerm::precomputed(PrecomputedTerm value)
{
	ProgramTerm term;
	term.m_kind = Kind::Precomputed;
	term.m_value = std::move(value);
	return term;
}

ProgramTerm ProgramTerm::variable(std::string name)
{
	ProgramTerm term;
	term.m_kind = Kind::Variable;
	term.m_name = std::move(name);
	return term;
}

ProgramTerm ProgramTerm::absolute(ProgramTerm operand)
{
	ProgramTerm term;
	term.m_kind = Kind::Absolute;
	term.m_left = std::make_shared<const ProgramTerm>(std::move(operand));
	return term;
}

ProgramTerm ProgramTerm::binary(BinaryOperator op, ProgramTerm left, ProgramTerm right)
{
	ProgramTerm term;
	term.m_kind = Kind::Binary;
	term.m_op = op;
	term.m_left = std::make_shared<const ProgramTerm>(std::move(left));
	term.m_right = std::make_shared<const ProgramTerm>(std::move(right));
	return term;
}

ProgramTerm ProgramTerm::negative(ProgramTerm operand)
{
	return binary(BinaryOperator::Minus, precomputed(0), std::move(operand));
}

bool ProgramTerm::isGround() const
{
	switch (m_kind)
	{
		case Kind::Precomputed:
			return true;
		case Kind::Variable:
			return false;
		case Kind::Absolute:
			return m_left->isGround();
		case Kind::Binary:
			return m_left->isGround() && m_right->isGround();
	}

	return false;
}

void ProgramTerm::collectVariables(std::set<std::string> &variables) const
{
	switch (m_kind)
	{
		case Kind::Precomputed:
			return;
		case Kind::Variable:
			variables.insert(m_name);
			return;
		case Kind::Absolute:
			m_left->collectVariables(variables);
			return;
		case Kind::Binary:
			m_left->collectVariables(variables);
			m_right->collectVariables(variables);
			return;
	}
}

ProgramTerm ProgramTerm::substitute(const std::string &variable, const PrecomputedTerm &value) const
{
	switch (m_kind)
	{
		case Kind::Precomputed:
			return *this;
		case Kind::Variable:
			return m_name == variable ? precomputed(value) : *this;
		case Kind::Absolute:
			return absolute(m_left->substitute(variable, value));
		case Kind::Binary:
			return binary(m_op, m_left->substitute(variable, value), m_right->substitute(variable, value));
	}

	return *this;
}

std::string ProgramTerm::toString() const
{
	switch (m_kind)
	{
		case Kind::Precomputed:
			return m_value.toString();
		case Kind::Variable:
			return m_name;
		case Kind::Absolute:
			return "|" + m_left->toString() + "|";
		case Kind::Binary:
		{
			const auto wrap =
				[](const ProgramTerm &term)
				{
					if (term.kind() == Kind::Binary)
						return "(" + term.toString() + ")";
					return term.toString();
				};

			const std::string separator = m_op == BinaryOperator::Interval ? ".." : std::string(" ") + ocomp::toString(m_op) + " ";
			return wrap(*m_left) + separator + wrap(*m_right);
		}
	}

	return "?";
}

bool ProgramTerm::operator==(const ProgramTerm &other) const
{
	if (m_kind != other.m_kind)
		return false;

	switch (m_kind)
	{
		case Kind::Precomputed:
			return m_value == other.m_value;
		case Kind::Variable:
			return m_name == other.m_name;
		case Kind::Absolute:
			return *m_left == *other.m_left;
		case Kind::Binary:
			return m_op == other.m_op && *m_left == *other.m_left && *m_right == *other.m_right;
	}

	return false;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Rules and programs
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string Atom::toString() const
{
	if (arguments.empty())
		return predicate;

	std::string result = predicate + "(";

	for (std::size_t i = 0; i < arguments.size(); i++)
	{
		if (i > 0)
			result += ", ";
		result += arguments[i].toString();
	}

	return result + ")";
}

std::string Literal::toString() const
{
	std::string result;

	for (int i = 0; i < negationCount; i++)
		result += "not ";

	return result + atom.toString();
}

const char *toString(Relation relation)
{
	switch (relation)
	{
		case Relation::Equal:
			return "=";
		case Relation::NotEqual:
			return "!=";
		case Relation::Less:
			return "<";
		case Relation::Greater:
			return ">";
		case Relation::LessEqual:
			return "<=";
		case Relation::GreaterEqual:
			return ">=";
	}

	return "?";
}

bool holds(Relation relation, std::strong_ordering order)
{
	switch (relation)
	{
		case Relation::Equal:
			return order == 0;
		case Relation::NotEqual:
			return order != 0;
		case Relation::Less:
			return order < 0;
		case Relation::Greater:
			return order > 0;
		case Relation::LessEqual:
			return order <= 0;
		case Relation::GreaterEqual:
			return order >= 0;
	}

	return false;
}

std::string Comparison::toString() const
{
	return left.toString() + " " + ocomp::toString(relation) + " " + right.toString();
}

Rule Rule::basic(Atom head, std::vector<BodyElement> body)
{
	return Rule{HeadKind::Basic, std::move(head), std::move(body)};
}

Rule Rule::choice(Atom head, std::vector<BodyElement> body)
{
	return Rule{HeadKind::Choice, std::move(head), std::move(body)};
}

Rule Rule::constraint(std::vector<BodyElement> body)
{
	return Rule{HeadKind::Constraint, {}, std::move(body)};
}

std::optional<Atom> Rule::headAtom() const
{
	if (headKind == HeadKind::Constraint)
		return std::nullopt;

	return head;
}

std::vector<Literal> Rule::positiveBody() const
{
	std::vector<Literal> result;

	for (const auto &element : body)
		if (const auto *literal = std::get_if<Literal>(&element); literal && literal->negationCount == 0)
			result.push_back(*literal);

	return result;
}

std::set<std::string> Rule::variables() const
{
	std::set<std::string> result;

	if (headKind != HeadKind::Constraint)
		for (const auto &argument : head.arguments)
			argument.collectVariables(result);

	for (const auto &element : body)
	{
		if (const auto *literal = std::get_if<Literal>(&element))
		{
			for (const auto &argument : literal->atom.arguments)
				argument.collectVariables(result);
		}
		else
		{
			const auto &comparison = std::get<Comparison>(element);
			comparison.left.collectVariables(result);
			comparison.right.collectVariables(result);
		}
	}

	return result;
}

std::string Rule::toString() const
{
	std::string result;

	switch (headKind)
	{
		case HeadKind::Basic:
			result = head.toString();
			break;
		case HeadKind::Choice:
			result = "{" + head.toString() + "}";
			break;
		case HeadKind::Constraint:
			break;
	}

	if (!body.empty() || headKind == HeadKind::Constraint)
	{
		result += result.empty() ? ":-" : " :-";

		for (std::size_t i = 0; i < body.size(); i++)
		{
			result += i == 0 ? " " : ", ";
			std::visit([&](const auto &element) { result += element.toString(); }, body[i]);
		}
	}

	return result + ".";
}

std::string Predicate::toString() const
{
	return name + "/" + std::to_string(arity);
}

namespace
{

template<class Callback>
void forEachAtom(const Program &program, Callback &&callback, bool headsOnly)
{
	for (const auto &rule : program.rules)
	{
		if (rule.headKind != Rule::HeadKind::Constraint)
			callback(rule.head);

		if (headsOnly)
			continue;

		for (const auto &element : rule.body)
			if (const auto *literal = std::get_if<Literal>(&element))
				callback(literal->atom);
	}
}

std::vector<Predicate> collectPredicates(const Program &program, bool headsOnly)
{
	std::vector<Predicate> result;
	std::set<Predicate> seen;

	forEachAtom(program,
		[&](const Atom &atom)
		{
			Predicate predicate{atom.predicate, atom.arguments.size()};
			if (seen.insert(predicate).second)
				result.push_back(std::move(predicate));
		}, headsOnly);

	return result;
}

}

std::vector<Predicate> Program::predicates() const
{
	return collectPredicates(*this, false);
}

std::vector<Predicate> Program::headPredicates() const
{
	return collectPredicates(*this, true);
}

void Program::checkArities() const
{
	std::map<std::string, std::size_t> arities;

	forEachAtom(*this,
		[&](const Atom &atom)
		{
			const auto [it, inserted] = arities.emplace(atom.predicate, atom.arguments.size());
			if (!inserted && it->second != atom.arguments.size())
				throw ArityError("predicate " + atom.predicate + " used with arities " + std::to_string(it->second) + " and " + std::to_string(atom.arguments.size()));
		}, false);
}

std::string Program::toString() const
{
	std::string result;

	for (const auto &rule : rules)
		result += rule.toString() + "\n";

	return result;
}

}
