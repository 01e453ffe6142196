#include "bitroute/errors.hpp"

namespace bitroute
{

ScenarioError::ScenarioError(std::vector<Diagnostic> diagnostics)
    : Error([&] {
          std::string text = "invalid scenario";
          for (const auto& d : diagnostics)
          {
              text += "\n  ";
              if (d.line != 0)
              {
                  text += "line " + std::to_string(d.line) + ": ";
              }
              text += d.message;
          }
          return text;
      }()),
      m_diagnostics(std::move(diagnostics))
{
}

} // namespace bitroute
