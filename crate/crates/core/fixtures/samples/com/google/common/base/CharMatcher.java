package com.google.common.base;

import static com.google.common.base.Preconditions.checkNotNull;

/**
 * Determines a true or false value for any Java {@code char} value.
 */
public abstract class CharMatcher implements Predicate<Character> {

  protected CharMatcher() {}

  /** Determines a true or false value for the given character. */
  public abstract boolean matches(char c);

  /**
   * Returns {@code true} if a character sequence contains only matching characters.
   *
   * @param sequence the characters to examine, possibly empty
   * @return true if this matcher matches every character in the
   * sequence, including when the sequence is empty.
   */
  public boolean matchesAllOf(CharSequence sequence) {
    for (int i = sequence.length() - 1; i >= 0; i--) {
      if (!matches(sequence.charAt(i))) {
        return false;
      }
    }
    return true;
  }

  /**
   * Returns {@code true} if a character sequence contains no matching characters.
   * Equivalent to {@code !matchesAnyOf(sequence)}.
   *
   * @param sequence the character sequence to inspect, which may be empty
   * @return true if this matcher matches every character in the
   * sequence, including when the sequence is empty.
   */
  public boolean matchesNoneOf(CharSequence sequence) {
    return indexIn(sequence) == -1;
  }

  public int indexIn(CharSequence sequence) {
    checkNotNull(sequence);
    int length = sequence.length();
    for (int i = 0; i < length; i++) {
      if (matches(sequence.charAt(i))) {
        return i;
      }
    }
    return -1;
  }
}
