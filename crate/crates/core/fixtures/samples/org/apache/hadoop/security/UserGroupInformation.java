package org.apache.hadoop.security;

import java.io.IOException;

import org.apache.hadoop.classification.InterfaceAudience;
import org.apache.hadoop.classification.InterfaceStability;

/**
 * User and group information for Hadoop.
 */
@InterfaceAudience.LimitedPrivate({"HDFS", "MapReduce", "HBase", "Hive", "Oozie"})
@InterfaceStability.Evolving
public class UserGroupInformation {

  private static UserGroupInformation loginUser = null;
  private final boolean isKeytab;
  private final boolean isKrbTkt;

  UserGroupInformation(boolean isKeytab, boolean isKrbTkt) {
    this.isKeytab = isKeytab;
    this.isKrbTkt = isKrbTkt;
  }

  /**
   * Did the login happen via keytab
   * @return true or false
   */
  @InterfaceAudience.Public
  @InterfaceStability.Evolving
  public synchronized static boolean isLoginKeytabBased() throws IOException {
    return getLoginUser().isKeytab;
  }

  /**
   * Did the login happen via ticket cache
   * @return true or false
   */
  public static boolean isLoginTicketBased()  throws IOException {
    return getLoginUser().isKrbTkt;
  }

  static UserGroupInformation getLoginUser() throws IOException {
    if (loginUser == null) {
      throw new IOException("not logged in");
    }
    return loginUser;
  }
}
