/**
 * Canonical number formatting, byte-compatible with the Python harness.
 *
 * The harness writes integral values as plain integers and everything else
 * as Python's repr(float). Reproducing repr exactly matters because the
 * summary CSVs are compared byte for byte across the two implementations.
 */

/** Python repr() of a finite double: shortest round-trip digits, fixed
 * notation for exponents in [-4, 16), scientific otherwise. */
export function pythonRepr(x: number): string {
  if (Number.isNaN(x)) return "nan";
  if (x === Infinity) return "inf";
  if (x === -Infinity) return "-inf";
  if (x === 0) return Object.is(x, -0) ? "-0.0" : "0.0";

  const neg = x < 0;
  // toExponential() with no argument yields exactly the shortest digit
  // string that round-trips, the same digits CPython's repr picks
  const [mantissa, expPart] = Math.abs(x).toExponential().split("e");
  const exp = parseInt(expPart, 10);
  const digits = mantissa.replace(".", "");

  let body: string;
  if (exp < -4 || exp >= 16) {
    const m = digits.length === 1 ? digits : `${digits[0]}.${digits.slice(1)}`;
    const sign = exp < 0 ? "-" : "+";
    body = `${m}e${sign}${Math.abs(exp).toString().padStart(2, "0")}`;
  } else if (exp >= digits.length - 1) {
    body = digits + "0".repeat(exp - (digits.length - 1)) + ".0";
  } else if (exp >= 0) {
    body = `${digits.slice(0, exp + 1)}.${digits.slice(exp + 1)}`;
  } else {
    body = `0.${"0".repeat(-exp - 1)}${digits}`;
  }
  return neg ? `-${body}` : body;
}

export function formatNumber(value: number): string {
  if (Number.isFinite(value) && Number.isInteger(value) && Math.abs(value) < 1e15) {
    return value.toString();
  }
  return pythonRepr(value);
}
