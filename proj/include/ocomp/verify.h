#ifndef OCOMP__VERIFY_H
#define OCOMP__VERIFY_H

#include <ocomp/bundle.h>
#include <ocomp/ordered.h>
#include <ocomp/syntax.h>

#include <chrono>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace ocomp
{

enum class SzsStatus
{
	Theorem,
	CounterSatisfiable,
	Timeout,
	GaveUp,
	Error
};

const char *toString(SzsStatus status);
// last "SZS status X" line; Unsatisfiable counts as Theorem, Satisfiable as CounterSatisfiable
std::optional<SzsStatus> parseSzsStatus(const std::string &output);

struct ProverSettings
{
	std::string executable;
	// {file} and {timeout} are replaced
	std::vector<std::string> arguments = {"--input_syntax", "tptp", "--proof", "off", "--time_limit", "{timeout}", "{file}"};
	std::chrono::seconds timeLimit{60};
	std::filesystem::path workDirectory;
	std::size_t parallelism = 1;

	// executable from OCOMP_PROVER, extra arguments from OCOMP_PROVER_ARGS
	static std::optional<ProverSettings> fromEnvironment();
};

struct ProcessResult
{
	int exitCode = -1;
	bool timedOut = false;
	std::string output;
	std::chrono::milliseconds elapsed{0};
};

struct SpawnError : Error
{
	using Error::Error;
};

ProcessResult runProcess(const std::vector<std::string> &command, std::chrono::milliseconds timeout);

enum class Direction
{
	Forward,
	Backward,
	Universal
};

struct ConjectureResult
{
	std::string name;
	std::string conjecture;
	SzsStatus status = SzsStatus::Error;
	std::chrono::milliseconds elapsed{0};
	std::filesystem::path problemFile;
	std::string transcript;
};

struct VerifyOutcome
{
	std::vector<ConjectureResult> forward;
	std::vector<ConjectureResult> backward;
	std::chrono::milliseconds elapsed{0};
	std::filesystem::path transcriptPath;

	bool success() const;
};

using VerifyTarget = std::variant<Program, std::vector<Formula>>;

struct VerifyConfig
{
	OcConfig orderedCompletion;
	// use ordinary completion instead of ordered completion
	bool bypassTightness = false;
	bool simplify = true;
};

// axioms for the program side
TheoryBundle programTheory(const Program &program, const VerifyConfig &config);
std::vector<NamedFormula> targetSentences(const VerifyTarget &target, const VerifyConfig &config);

VerifyOutcome runVerify(const Program &program, const VerifyTarget &target, Direction direction, const VerifyConfig &config, const ProverSettings &prover, std::ostream &log);

}

#endif
