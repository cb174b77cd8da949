#include <ocomp/completion.h>
#include <ocomp/ground.h>
#include <ocomp/ordered.h>
#include <ocomp/simplify.h>
#include <ocomp/tau_star.h>
#include <ocomp/theory.h>
#include <ocomp/verify.h>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Input
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string readInput(const std::string &path)
{
	std::ostringstream buffer;

	if (path == "-")
	{
		buffer << std::cin.rdbuf();
		return buffer.str();
	}

	std::ifstream file{path};
	if (!file)
		throw ocomp::Error("cannot read " + path);

	buffer << file.rdbuf();
	return buffer.str();
}

bool endsWith(const std::string &text, const std::string &suffix)
{
	return text.size() >= suffix.size() && text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// a program, or a theory for .spec files and for input that only parses as formulas
std::variant<ocomp::Program, std::vector<ocomp::Formula>> readProgramOrTheory(const std::string &path)
{
	const auto text = readInput(path);

	if (endsWith(path, ".spec"))
		return ocomp::parseSpec(text);

	if (endsWith(path, ".lp"))
		return ocomp::parseProgram(text);

	try
	{
		return ocomp::parseProgram(text);
	}
	catch (const ocomp::SyntaxError &programError)
	{
		try
		{
			return ocomp::parseSpec(text);
		}
		catch (const ocomp::Error &)
		{
			throw programError;
		}
	}
}

ocomp::Domain parseDomain(const std::string &text)
{
	ocomp::Domain domain;
	std::istringstream stream{text};

	for (std::string item; std::getline(stream, item, ',');)
	{
		const auto first = item.find_first_not_of(" \t");
		const auto last = item.find_last_not_of(" \t");

		if (first == std::string::npos)
			continue;

		item = item.substr(first, last - first + 1);

		if (ocomp::isIdentifier(item))
			domain.general.insert(ocomp::PrecomputedTerm::symbol(item));
		else
		{
			std::size_t consumed = 0;
			std::int64_t value = 0;

			try
			{
				value = std::stoll(item, &consumed);
			}
			catch (const std::exception &)
			{
				consumed = 0;
			}

			if (consumed != item.size())
				throw ocomp::Error("invalid domain element " + item);

			domain.general.insert(ocomp::PrecomputedTerm{value});
		}
	}

	return domain;
}

void printFormulas(const std::vector<ocomp::Formula> &formulas)
{
	for (const auto &formula : formulas)
		std::cout << formula.toString() << ".\n";
}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Commands
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct TranslateOptions
{
	std::string with;
	std::string file = "-";
	bool axioms = false;
	bool noSimplify = false;
	bool completeUndefined = false;
	bool minimalAxioms = false;
	bool levelMapping = false;
	bool expanded = false;
};

int translate(const TranslateOptions &options)
{
	const auto input = readProgramOrTheory(options.file);

	if (options.with == "tau-star")
	{
		const auto *program = std::get_if<ocomp::Program>(&input);
		if (!program)
			throw ocomp::Error("tau-star expects a program");

		printFormulas(ocomp::tauStarProgram(*program));
		return 0;
	}

	ocomp::TheoryBundle bundle;

	if (options.with == "completion")
	{
		if (const auto *program = std::get_if<ocomp::Program>(&input))
			bundle = ocomp::completionBundle(*program, options.completeUndefined);
		else
			bundle = ocomp::completionBundle(ocomp::analyzeTauStar(std::get<std::vector<ocomp::Formula>>(input)), options.completeUndefined);
	}
	else
	{
		ocomp::OcConfig config;
		config.variant = options.levelMapping ? ocomp::OrderVariant::LevelMapping : ocomp::OrderVariant::OrderPredicates;
		config.simplified = !options.expanded;
		config.completeUndefined = options.completeUndefined;
		config.minimalAxioms = options.minimalAxioms;

		if (const auto *program = std::get_if<ocomp::Program>(&input))
			bundle = ocomp::orderedCompletion(*program, config);
		else
			bundle = ocomp::orderedCompletion(ocomp::analyzeTauStar(std::get<std::vector<ocomp::Formula>>(input)), config);
	}

	if (!options.noSimplify)
		bundle = ocomp::simplifyBundle(bundle);

	for (const auto &section : bundle.sections)
	{
		if (section.name == "axioms" && !options.axioms)
			continue;

		for (const auto &named : section.formulas)
			std::cout << named.formula.toString() << ".\n";
	}

	return 0;
}

struct VerifyOptions
{
	std::string equivalence = "ordered-completion";
	std::string direction = "universal";
	bool bypassTightness = false;
	bool noSimplify = false;
	bool levelMapping = false;
	bool minimalAxioms = false;
	std::string prover;
	std::int64_t timeLimit = 60;
	std::size_t parallelism = 1;
	std::string workDirectory;
	std::string left;
	std::string right;
};

int verify(const VerifyOptions &options)
{
	auto prover = ocomp::ProverSettings::fromEnvironment();

	if (!options.prover.empty())
	{
		if (!prover)
			prover = ocomp::ProverSettings{};
		prover->executable = options.prover;
	}

	if (!prover)
	{
		std::cerr << "error: no prover configured, set OCOMP_PROVER or pass --prover\n";
		return 2;
	}

	prover->timeLimit = std::chrono::seconds{options.timeLimit};
	prover->parallelism = options.parallelism;
	if (!options.workDirectory.empty())
		prover->workDirectory = options.workDirectory;

	const auto program = ocomp::parseProgram(readInput(options.left));

	ocomp::VerifyTarget target;
	if (endsWith(options.right, ".lp"))
		target = ocomp::parseProgram(readInput(options.right));
	else
		target = ocomp::parseSpec(readInput(options.right));

	ocomp::VerifyConfig config;
	config.bypassTightness = options.bypassTightness;
	config.simplify = !options.noSimplify;
	config.orderedCompletion.completeUndefined = true;
	config.orderedCompletion.minimalAxioms = options.minimalAxioms;
	config.orderedCompletion.variant = options.levelMapping ? ocomp::OrderVariant::LevelMapping : ocomp::OrderVariant::OrderPredicates;

	const auto direction = options.direction == "forward" ? ocomp::Direction::Forward
		: options.direction == "backward" ? ocomp::Direction::Backward : ocomp::Direction::Universal;

	const auto outcome = ocomp::runVerify(program, target, direction, config, *prover, std::cout);

	return outcome.success() ? 0 : 1;
}

struct OracleOptions
{
	std::string domain;
	std::int64_t intRadius = 2;
	std::string file;
};

int oracle(const OracleOptions &options)
{
	const auto program = ocomp::parseProgram(readInput(options.file));
	program.checkArities();

	if (options.domain.empty())
		std::cerr << "note: no --domain given, using the program constants and its integers widened by " << options.intRadius << "\n";

	const auto domain = options.domain.empty() ? ocomp::defaultDomain(program, options.intRadius) : parseDomain(options.domain);
	const auto models = ocomp::stableModels(program, domain);

	for (std::size_t i = 0; i < models.size(); i++)
		std::cout << "Stable model " << i + 1 << ": " << ocomp::toString(models[i]) << "\n";

	std::cout << "Models: " << models.size() << "\n";
	return 0;
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Main
//
////////////////////////////////////////////////////////////////////////////////////////////////////

int main(int argc, char **argv)
{
	CLI::App app{"Completion and ordered completion of logic programs"};
	app.require_subcommand(1);

	TranslateOptions translateOptions;
	auto *translateCommand = app.add_subcommand("translate", "Translate a program into first-order formulas");
	translateCommand->add_option("--with", translateOptions.with, "Translation")
		->required()->check(CLI::IsMember({"tau-star", "completion", "ordered-completion"}));
	translateCommand->add_flag("--axioms", translateOptions.axioms, "Include order axioms");
	translateCommand->add_flag("--no-simplify", translateOptions.noSimplify, "Print formulas as constructed");
	translateCommand->add_flag("--complete-undefined", translateOptions.completeUndefined, "Complete predicates without rules too");
	translateCommand->add_flag("--minimal-axioms", translateOptions.minimalAxioms, "Only axiom instances reachable from body-head pairs");
	translateCommand->add_flag("--level-mapping", translateOptions.levelMapping, "Use level functions instead of order predicates");
	translateCommand->add_flag("--expanded", translateOptions.expanded, "Keep the body literals next to their ordered copies");
	translateCommand->add_option("FILE", translateOptions.file, "Input file, - for stdin");

	VerifyOptions verifyOptions;
	auto *verifyCommand = app.add_subcommand("verify", "Prove a program against a specification with an external prover");
	verifyCommand->add_option("--equivalence", verifyOptions.equivalence, "Program translation")
		->check(CLI::IsMember({"ordered-completion"}));
	verifyCommand->add_option("--direction", verifyOptions.direction, "Direction")
		->check(CLI::IsMember({"forward", "backward", "universal"}));
	verifyCommand->add_flag("--bypass-tightness", verifyOptions.bypassTightness, "Use ordinary completion");
	verifyCommand->add_flag("--no-simplify", verifyOptions.noSimplify, "Do not simplify the theories");
	verifyCommand->add_flag("--level-mapping", verifyOptions.levelMapping, "Use level functions instead of order predicates");
	verifyCommand->add_flag("--minimal-axioms", verifyOptions.minimalAxioms, "Only axiom instances reachable from body-head pairs");
	verifyCommand->add_option("--prover", verifyOptions.prover, "Prover executable, defaults to $OCOMP_PROVER");
	verifyCommand->add_option("--time-limit", verifyOptions.timeLimit, "Seconds per sub-problem")->check(CLI::PositiveNumber);
	verifyCommand->add_option("--parallelism", verifyOptions.parallelism, "Concurrent prover processes")->check(CLI::PositiveNumber);
	verifyCommand->add_option("--work-dir", verifyOptions.workDirectory, "Directory for problem files");
	verifyCommand->add_option("LEFT", verifyOptions.left, "Program")->required();
	verifyCommand->add_option("RIGHT", verifyOptions.right, "Specification or program")->required();

	OracleOptions oracleOptions;
	auto *oracleCommand = app.add_subcommand("oracle", "List the stable models over a finite domain");
	oracleCommand->add_option("--domain", oracleOptions.domain, "Comma-separated domain elements");
	oracleCommand->add_option("--int-radius", oracleOptions.intRadius, "Integer widening of the default domain");
	oracleCommand->add_option("FILE", oracleOptions.file, "Program")->required();

	CLI11_PARSE(app, argc, argv);

	try
	{
		if (translateCommand->parsed())
			return translate(translateOptions);
		if (verifyCommand->parsed())
			return verify(verifyOptions);
		if (oracleCommand->parsed())
			return oracle(oracleOptions);
	}
	catch (const ocomp::SyntaxError &error)
	{
		std::cerr << "syntax error: " << error.what() << "\n";
		return 2;
	}
	catch (const std::exception &error)
	{
		std::cerr << "error: " << error.what() << "\n";
		return 2;
	}

	return 2;
}
