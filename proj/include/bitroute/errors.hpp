#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bitroute
{

/// Base for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Topology misuse: bad ids, self-loops, duplicate or missing edges, dead nodes.
class GraphError : public Error
{
  public:
    using Error::Error;
};

/// A mask that cannot be decoded.
class MaskError : public Error
{
  public:
    enum class Kind
    {
        Untrained, ///< zero mask
        Corrupt,   ///< more than one bit set
        OutOfRange ///< ordinal outside 1..kMaxOrdinal
    };

    MaskError(Kind kind, const std::string& what)
        : Error(what),
          m_kind(kind)
    {
    }

    Kind kind() const noexcept
    {
        return m_kind;
    }

  private:
    Kind m_kind;
};

/// Route table misuse (e.g. an entry for the owner itself).
class TableError : public Error
{
  public:
    using Error::Error;
};

/// One located problem in a scenario or scenario file. line == 0 means
/// the problem has no source position (e.g. an event index problem).
struct Diagnostic
{
    std::size_t line = 0;
    std::string message;
};

/// Scenario parse or validation failure. Carries every diagnostic found.
class ScenarioError : public Error
{
  public:
    explicit ScenarioError(std::vector<Diagnostic> diagnostics);

    const std::vector<Diagnostic>& diagnostics() const noexcept
    {
        return m_diagnostics;
    }

  private:
    std::vector<Diagnostic> m_diagnostics;
};

} // namespace bitroute
