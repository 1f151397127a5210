#pragma once

namespace artin {

/// Selects between the serial reference loop and the OpenMP kernel.
/// Both must produce identical, order-stable results.
enum class Execution { serial, parallel };

} // namespace artin
