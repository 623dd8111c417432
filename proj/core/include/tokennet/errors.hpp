#pragma once

#include <stdexcept>
#include <string>

namespace tokennet {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent game configuration (JSON or in-memory).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// File could not be read, written, or parsed at the byte level.
class IoError : public Error {
public:
    using Error::Error;
};

/// An allocation log violates the one-token-per-player-per-round contract.
class ValidationError : public Error {
public:
    enum class Kind {
        MissingGiver,    // a round has no record for some player
        DuplicateGiver,  // a round has two records for the same player
        IdOutOfRange,    // round or player id outside the configured ranges
        RoundGap,        // rounds out of order or a round with no records at all
    };

    ValidationError(Kind kind, int round, int player, const std::string& message)
        : Error(message), kind_(kind), round_(round), player_(player) {}

    Kind kind() const { return kind_; }
    int round() const { return round_; }
    int player() const { return player_; }  // 0 when not applicable

    static ValidationError missing_giver(int round, int player);
    static ValidationError duplicate_giver(int round, int player);
    static ValidationError id_out_of_range(int record_index, int round, int giver, int receiver);
    static ValidationError round_gap(int round);

private:
    Kind kind_;
    int round_;
    int player_;
};

class RoundOutOfRange : public Error {
public:
    RoundOutOfRange(int t, int n_rounds)
        : Error("round " + std::to_string(t) + " outside 1.." + std::to_string(n_rounds)) {}
};

class UnknownPlayer : public Error {
public:
    explicit UnknownPlayer(int player)
        : Error("unknown player id " + std::to_string(player)) {}
};

class UnknownCoefficient : public Error {
public:
    explicit UnknownCoefficient(const std::string& name)
        : Error("unknown coefficient '" + name + "'") {}
};

class EmptyScope : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A design matrix restricted to i != j rows received a self pair.
class SelfRowPresent : public Error {
public:
    using Error::Error;
};

/// Every replicate fit was degenerate, so no distribution can be formed.
class AllFitsDegenerate : public Error {
public:
    using Error::Error;
};

}  // namespace tokennet
